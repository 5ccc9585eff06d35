#ifndef COXMUT_PRESENTATION_IO_HPP
#define COXMUT_PRESENTATION_IO_HPP

// Line-oriented text form of a Presentation:
//
//   gens <n>
//   pow <i> <j> <m>            (g_i g_j)^m = e
//   cyc <i1> ... <id> ^ <m>    cycle relator, vertices in word order
//   rel <i1> ... <ik> ^ <m>    (g_i1 ... g_ik)^m = e
//
// Indices are 1-based; '#' starts a comment.

#include "errors.hpp"
#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace coxmut {

inline std::string emit_presentation(const Presentation& p)
{
    std::ostringstream out;
    out << "gens " << p.n_generators << '\n';
    auto pows = p.power_relators;
    std::sort(pows.begin(), pows.end());
    for (const auto& r : pows) out << "pow " << r.i + 1 << ' ' << r.j + 1 << ' ' << r.m << '\n';
    auto cycs = p.cycle_relators;
    std::sort(cycs.begin(), cycs.end(), [](const auto& a, const auto& b) { return a.cycle < b.cycle; });
    for (const auto& c : cycs) {
        out << "cyc";
        for (Index v : c.rotated()) out << ' ' << v + 1;
        out << " ^ " << c.exponent << '\n';
    }
    for (const auto& e : p.extra_relators) {
        out << "rel";
        for (Index v : e.word) out << ' ' << v + 1;
        out << " ^ " << e.exponent << '\n';
    }
    return out.str();
}

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline long parse_int(const Token& t, std::size_t line, const char* what)
{
    long v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(t.text) + "'", line,
                         t.column);
    return v;
}

} // namespace detail

/// `implied_generators` stands in for a missing `gens` line.
inline Presentation parse_presentation(std::string_view text, std::optional<Index> implied_generators = std::nullopt)
{
    Presentation p;
    bool have_gens = false;
    if (implied_generators) {
        p.n_generators = *implied_generators;
        have_gens = true;
    }
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        const auto toks = detail::tokenize(line);
        if (toks.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        const auto& head = toks.front();
        auto index = [&](const detail::Token& t) {
            const long v = detail::parse_int(t, line_no, "generator index");
            if (v < 1 || static_cast<Index>(v) > p.n_generators)
                throw ParseError("generator index " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(p.n_generators),
                                 line_no, t.column);
            return static_cast<Index>(v - 1);
        };
        if (head.text == "gens") {
            if (have_gens && !implied_generators) throw ParseError("duplicate 'gens' line", line_no, head.column);
            if (toks.size() != 2) throw ParseError("'gens' takes one argument", line_no, head.column);
            const long n = detail::parse_int(toks[1], line_no, "generator count");
            if (n < 1) throw ParseError("generator count must be positive", line_no, toks[1].column);
            if (implied_generators && static_cast<Index>(n) != *implied_generators)
                throw ParseError("generator count does not match the diagram rank", line_no, toks[1].column);
            implied_generators.reset();
            p.n_generators = static_cast<Index>(n);
            have_gens = true;
            continue;
        }
        if (!have_gens) throw ParseError("'gens' must come first", line_no, head.column);
        if (head.text == "pow") {
            if (toks.size() != 4) throw ParseError("'pow' takes three arguments", line_no, head.column);
            PowerRelator r{index(toks[1]), index(toks[2]), 0};
            const long m = detail::parse_int(toks[3], line_no, "exponent");
            if (m < 2) throw ParseError("power exponent must be >= 2", line_no, toks[3].column);
            if (r.i == r.j) throw ParseError("'pow' needs two distinct generators", line_no, toks[2].column);
            if (r.i > r.j) std::swap(r.i, r.j);
            r.m = static_cast<int>(m);
            p.power_relators.push_back(r);
        } else if (head.text == "cyc" || head.text == "rel") {
            if (toks.size() < 4 || toks[toks.size() - 2].text != "^")
                throw ParseError("expected '<indices> ^ <m>'", line_no, head.column);
            std::vector<Index> vs;
            for (std::size_t k = 1; k + 2 < toks.size(); ++k) vs.push_back(index(toks[k]));
            const auto& exp_tok = toks.back();
            const long m = detail::parse_int(exp_tok, line_no, "exponent");
            if (m < 1) throw ParseError("exponent must be positive", line_no, exp_tok.column);
            if (head.text == "rel") {
                p.extra_relators.push_back({Word(vs), static_cast<int>(m)});
                continue;
            }
            if (vs.size() < 3) throw ParseError("cycle needs at least 3 vertices", line_no, head.column);
            CycleRelator c;
            try {
                c.t_value = cycle_t_from_exponent(static_cast<int>(m));
            } catch (const InvalidInput& e) {
                throw ParseError(e.what(), line_no, exp_tok.column);
            }
            const std::size_t d = vs.size();
            const auto root = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
            c.cycle = vs;
            std::rotate(c.cycle.begin(), c.cycle.begin() + static_cast<std::ptrdiff_t>(root), c.cycle.end());
            c.rotation = (d - root) % d;
            c.exponent = static_cast<int>(m);
            c.word = cycle_word(vs);
            p.cycle_relators.push_back(std::move(c));
        } else {
            throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no, head.column);
        }
    }
    if (!have_gens) throw ParseError("missing 'gens' line", line_no == 0 ? 1 : line_no, 1);
    std::sort(p.power_relators.begin(), p.power_relators.end());
    std::sort(p.cycle_relators.begin(), p.cycle_relators.end(),
              [](const auto& a, const auto& b) { return a.cycle < b.cycle; });
    return p;
}

/// Extra-relator file: `rel` lines only (a `gens` line is optional).
inline std::vector<ExtraRelator> parse_extra_relators(std::string_view text, Index n)
{
    return parse_presentation(text, n).extra_relators;
}

} // namespace coxmut

#endif // COXMUT_PRESENTATION_IO_HPP
