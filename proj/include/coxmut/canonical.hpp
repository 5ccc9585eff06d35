#ifndef COXMUT_CANONICAL_HPP
#define COXMUT_CANONICAL_HPP

// Canonical forms of small vertex-labeled/edge-labeled digraphs given as a
// square integer "code" matrix. Partition refinement, then individualization
// with backtracking over the residual cells; the key is the lexicographically
// least row-major encoding over all leaves of the search tree.

#include "exchange.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace coxmut {

/// Byte string identifying a labeled digraph up to vertex relabeling.
struct CanonicalKey {
    std::string bytes;

    std::string hex() const
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (unsigned char c : bytes) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 15]);
        }
        return out;
    }

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};

namespace detail {

class Canonicalizer {
public:
    Canonicalizer(Index n, std::span<const std::int64_t> code) : n_(n), code_(code) {}

    /// Returns the best vertex order: order[pos] = original vertex.
    std::vector<Index> run()
    {
        std::vector<std::vector<Index>> cells;
        if (n_ > 0) {
            std::vector<Index> all(n_);
            for (Index i = 0; i < n_; ++i) all[i] = i;
            cells.push_back(std::move(all));
        }
        refine(cells);
        search(cells);
        return best_order_;
    }

private:
    std::int64_t at(Index i, Index j) const { return code_[i * n_ + j]; }

    // Splits cells by (own diagonal, multiset of (cell of neighbour, out code, in code))
    // until stable. Cell order is derived from invariant data only.
    void refine(std::vector<std::vector<Index>>& cells) const
    {
        using Sig = std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>>;
        for (;;) {
            std::vector<std::size_t> cell_of(n_);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (Index v : cells[c]) cell_of[v] = c;
            std::vector<std::vector<Index>> next;
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::pair<std::int64_t, Sig>, std::vector<Index>> groups;
                for (Index v : cell) {
                    Sig sig;
                    for (Index u = 0; u < n_; ++u)
                        if (u != v && (at(v, u) != 0 || at(u, v) != 0)) sig.emplace_back(cell_of[u], at(v, u), at(u, v));
                    std::sort(sig.begin(), sig.end());
                    groups[{at(v, v), std::move(sig)}].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, members] : groups) next.push_back(std::move(members));
            }
            cells = std::move(next);
            if (!changed) return;
        }
    }

    // Transposition (u v) is an automorphism.
    bool twins(Index u, Index v) const
    {
        if (at(u, u) != at(v, v) || at(u, v) != at(v, u)) return false;
        for (Index x = 0; x < n_; ++x) {
            if (x == u || x == v) continue;
            if (at(u, x) != at(v, x) || at(x, u) != at(x, v)) return false;
        }
        return true;
    }

    void search(const std::vector<std::vector<Index>>& cells)
    {
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<Index> order;
            order.reserve(n_);
            for (const auto& c : cells) order.push_back(c.front());
            offer(order);
            return;
        }
        const auto pos = static_cast<std::size_t>(target - cells.begin());
        std::vector<Index> tried;
        for (Index v : *target) {
            if (std::any_of(tried.begin(), tried.end(), [&](Index t) { return twins(t, v); })) continue;
            tried.push_back(v);
            std::vector<std::vector<Index>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != pos) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<Index> rest;
                for (Index u : cells[c])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            refine(child);
            search(child);
        }
    }

    void offer(const std::vector<Index>& order)
    {
        std::vector<std::int64_t> enc;
        enc.reserve(n_ * n_);
        for (Index a = 0; a < n_; ++a)
            for (Index b = 0; b < n_; ++b) enc.push_back(at(order[a], order[b]));
        if (best_order_.empty() || enc < best_encoding_) {
            best_encoding_ = std::move(enc);
            best_order_ = order;
        }
    }

    Index n_;
    std::span<const std::int64_t> code_;
    std::vector<std::int64_t> best_encoding_;
    std::vector<Index> best_order_;
};

inline void append_int32(std::string& out, std::int64_t v)
{
    const auto u = static_cast<std::uint32_t>(static_cast<std::int32_t>(v));
    for (int s = 0; s < 32; s += 8) out.push_back(static_cast<char>((u >> s) & 0xff));
}

} // namespace detail

/// Canonical vertex order for a code matrix: result[pos] = original vertex.
inline std::vector<Index> canonical_order(Index n, std::span<const std::int64_t> code)
{
    return detail::Canonicalizer(n, code).run();
}

inline CanonicalKey canonical_key(Index n, std::span<const std::int64_t> code)
{
    const auto order = canonical_order(n, code);
    CanonicalKey key;
    detail::append_int32(key.bytes, static_cast<std::int64_t>(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) detail::append_int32(key.bytes, code[order[a] * n + order[b]]);
    return key;
}

inline CanonicalKey canonical_form(const Diagram& g) { return canonical_key(g.size(), g.code()); }

} // namespace coxmut

#endif // COXMUT_CANONICAL_HPP
