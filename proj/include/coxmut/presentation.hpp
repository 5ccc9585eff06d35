#ifndef COXMUT_PRESENTATION_HPP
#define COXMUT_PRESENTATION_HPP

// Group presentations attached to a diagram: Coxeter relators from edge
// labels, one cycle relator per chordless oriented cycle, and user-supplied
// extra relators. Also the evolution of generator words along mutations.

#include "coxeter_matrix.hpp"
#include "cycles.hpp"
#include "word.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace coxmut {

/// Edge label -> m_ij: 1 -> 3, 2 -> 4, 3 -> 6, 4 -> infinity; no edge -> 2.
inline CoxeterMatrix coxeter_data(const Diagram& g)
{
    CoxeterMatrix c(g.size());
    for (Index i = 0; i < g.size(); ++i)
        for (Index j = i + 1; j < g.size(); ++j) {
            switch (g.weight(i, j)) {
            case 0: break;
            case 1: c.set(i, j, 3); break;
            case 2: c.set(i, j, 4); break;
            case 3: c.set(i, j, 6); break;
            case 4: c.set(i, j, CoxeterMatrix::kInfinity); break;
            default:
                throw InvalidInput("coxeter data: label " + std::to_string(g.weight(i, j)) + " on edge (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") outside {1,2,3,4}");
            }
        }
    return c;
}

/// t(l) in {0,1,2,3} -> m(l) in {2,3,4,6}; 0 when no relation is imposed.
inline int cycle_exponent(std::int64_t t)
{
    static constexpr std::array<int, 4> m{2, 3, 4, 6};
    return (t >= 0 && t < 4) ? m[static_cast<std::size_t>(t)] : 0;
}

inline std::int64_t cycle_t_from_exponent(int m)
{
    switch (m) {
    case 2: return 0;
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    default: throw InvalidInput("cycle relator exponent must be 2, 3, 4 or 6");
    }
}

struct CycleRelator {
    VertexCycle cycle;                ///< arrow order, rooted at the least vertex
    std::size_t rotation = 0;         ///< chosen l
    std::vector<std::int64_t> t_all;  ///< t(l) for every rotation (empty after parsing)
    std::int64_t t_value = 0;
    int exponent = 2;
    Word word;                        ///< s_{i_l} s_{i_l+1} ... s_{i_l+d-1} ... s_{i_l+1}

    /// Vertices in word order, starting at i_l.
    VertexCycle rotated() const
    {
        VertexCycle out;
        for (std::size_t k = 0; k < cycle.size(); ++k) out.push_back(cycle[(rotation + k) % cycle.size()]);
        return out;
    }

    bool operator==(const CycleRelator& o) const
    {
        return cycle == o.cycle && rotation == o.rotation && t_value == o.t_value && exponent == o.exponent &&
               word == o.word;
    }
};

/// s_{c0} s_{c1} ... s_{c(d-2)} s_{c(d-1)} s_{c(d-2)} ... s_{c1}.
inline Word cycle_word(const VertexCycle& rotated)
{
    Word w;
    const std::size_t d = rotated.size();
    for (std::size_t k = 0; k < d; ++k) w.letters.push_back(rotated[k]);
    for (std::size_t k = d - 1; k-- > 1;) w.letters.push_back(rotated[k]);
    return w;
}

inline CycleRelator cycle_relator(const Diagram& g, VertexCycle cycle)
{
    const std::size_t d = cycle.size();
    if (d < 3) throw InvalidInput("cycle relator: cycle must have length >= 3");
    for (std::size_t k = 0; k < d; ++k)
        if (!g.has_arrow(cycle[k], cycle[(k + 1) % d])) throw InvalidInput("cycle relator: cycle is not oriented");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 2; b < d; ++b)
            if (!(a == 0 && b == d - 1) && g.adjacent(cycle[a], cycle[b]))
                throw InvalidInput("cycle relator: cycle has a chord");
    const auto root = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(root), cycle.end());

    CycleRelator r;
    r.cycle = cycle;
    std::int64_t product = 1;
    for (std::size_t k = 0; k < d; ++k) product *= g.weight(cycle[k], cycle[(k + 1) % d]);
    if (!is_perfect_square(product))
        throw InvalidInput("cycle relator: label product along the cycle is not a perfect square");
    for (std::size_t l = 0; l < d; ++l) {
        // Path i_l -> ... -> i_{l+d-1}, closing edge i_{l+d-1} -> i_l.
        const std::int64_t closing = g.weight(cycle[(l + d - 1) % d], cycle[l]);
        const std::int64_t path = product / closing;
        const std::int64_t t = path + closing - 2 * isqrt_exact(path * closing);
        r.t_all.push_back(t);
    }
    const auto it = std::find(r.t_all.begin(), r.t_all.end(), 0);
    if (it == r.t_all.end()) throw InvalidInput("cycle relator: no rotation with t(l) = 0");
    r.rotation = static_cast<std::size_t>(it - r.t_all.begin());
    r.t_value = 0;
    r.exponent = 2;
    r.word = cycle_word(r.rotated());
    return r;
}

struct PowerRelator {
    Index i = 0;
    Index j = 0;
    int m = 2;
    friend auto operator<=>(const PowerRelator&, const PowerRelator&) = default;
};

struct ExtraRelator {
    Word word;
    int exponent = 1;
    friend auto operator<=>(const ExtraRelator&, const ExtraRelator&) = default;
};

/// Involutive generators (g_i^2 = e implicit), power relators for finite
/// m_ij, cycle relators, and extra relators kept in the given order.
struct Presentation {
    Index n_generators = 0;
    std::vector<PowerRelator> power_relators;
    std::vector<CycleRelator> cycle_relators;
    std::vector<ExtraRelator> extra_relators;

    /// Every relator as a word, squares of generators first.
    std::vector<Word> relator_words() const
    {
        std::vector<Word> out;
        for (Index i = 0; i < n_generators; ++i) out.push_back(Word{i, i});
        for (const auto& p : power_relators) out.push_back(Word{p.i, p.j}.power(static_cast<unsigned>(p.m)));
        for (const auto& c : cycle_relators) out.push_back(c.word.power(static_cast<unsigned>(c.exponent)));
        for (const auto& e : extra_relators) out.push_back(e.word.power(static_cast<unsigned>(e.exponent)));
        return out;
    }

    /// Same generators and Coxeter relators only: the group W_0.
    Presentation coxeter_part() const
    {
        Presentation p;
        p.n_generators = n_generators;
        p.power_relators = power_relators;
        return p;
    }

    bool operator==(const Presentation&) const = default;
};

inline Presentation coxeter_presentation(const CoxeterMatrix& c)
{
    Presentation p;
    p.n_generators = c.size();
    for (Index i = 0; i < c.size(); ++i)
        for (Index j = i + 1; j < c.size(); ++j)
            if (!c.infinite(i, j)) p.power_relators.push_back({i, j, c(i, j)});
    return p;
}

inline Presentation build_presentation(const Diagram& g, const std::vector<ExtraRelator>& extra = {})
{
    Presentation p = coxeter_presentation(coxeter_data(g));
    for (auto& cyc : chordless_oriented_cycles(g)) p.cycle_relators.push_back(cycle_relator(g, std::move(cyc)));
    std::sort(p.cycle_relators.begin(), p.cycle_relators.end(),
              [](const CycleRelator& a, const CycleRelator& b) { return a.cycle < b.cycle; });
    for (const auto& e : extra) {
        for (Index x : e.word)
            if (x >= g.size()) throw InvalidInput("extra relator uses a generator out of range");
        if (e.exponent < 1) throw InvalidInput("extra relator exponent must be positive");
    }
    p.extra_relators = extra;
    return p;
}

/// Words for the generators of the mutated diagram in terms of the
/// generators of the starting one.
struct GeneratorWords {
    std::vector<Word> words;

    static GeneratorWords identity(Index n)
    {
        GeneratorWords g;
        for (Index i = 0; i < n; ++i) g.words.push_back(Word{i});
        return g;
    }

    std::size_t size() const noexcept { return words.size(); }
    const Word& operator[](Index i) const { return words[i]; }

    friend bool operator==(const GeneratorWords&, const GeneratorWords&) = default;
};

/// t_i = s_k s_i s_k when the current matrix has an arrow i -> k, else t_i = s_i.
inline GeneratorWords evolve_generators(const ExchangeMatrix& start, const MutationSequence& seq)
{
    ExchangeMatrix cur = start;
    GeneratorWords g = GeneratorWords::identity(start.rank());
    for (Index k : seq) {
        if (k >= cur.rank()) throw InvalidInput("mutation index out of range");
        std::vector<Word> next = g.words;
        for (Index i = 0; i < cur.rank(); ++i)
            if (cur(i, k) > 0) next[i] = (g.words[k] * g.words[i] * g.words[k].inverse()).reduced();
        g.words = std::move(next);
        cur = mutate(cur, k);
    }
    return g;
}

} // namespace coxmut

#endif // COXMUT_PRESENTATION_HPP
