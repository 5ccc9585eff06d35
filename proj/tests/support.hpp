#ifndef COXMUT_TESTS_SUPPORT_HPP
#define COXMUT_TESTS_SUPPORT_HPP

#include "coxmut/coxmut.hpp"

#include <numeric>
#include <random>

namespace coxmut::testing {

/// Random skew-symmetrizable matrix with symmetrizer entries in {1,2,3}.
inline ExchangeMatrix random_matrix(std::mt19937& rng, Index n, int max_entry = 3, bool quiver = false)
{
    std::uniform_int_distribution<int> dpick(1, 3), cpick(-max_entry, max_entry);
    std::vector<std::int64_t> d(n, 1);
    if (!quiver)
        for (auto& x : d) x = dpick(rng);
    std::vector<std::int64_t> b(n * n, 0);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const std::int64_t c = cpick(rng);
            const std::int64_t g = std::gcd(d[i], d[j]);
            b[i * n + j] = c * d[i] / g;
            b[j * n + i] = -c * d[j] / g;
        }
    return ExchangeMatrix(n, std::move(b), std::move(d));
}

inline MutationSequence random_sequence(std::mt19937& rng, Index n, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::vector<Index> s(len(rng));
    for (auto& k : s) k = pick(rng);
    return MutationSequence(std::move(s));
}

/// Simultaneous permutation of rows and columns: new vertex p[i] is old vertex i.
inline ExchangeMatrix relabel(const ExchangeMatrix& m, const std::vector<Index>& p)
{
    const Index n = m.rank();
    std::vector<std::int64_t> b(n * n), d(n);
    for (Index i = 0; i < n; ++i) {
        d[p[i]] = m.symmetrizer(i);
        for (Index j = 0; j < n; ++j) b[p[i] * n + p[j]] = m(i, j);
    }
    return ExchangeMatrix(n, std::move(b), std::move(d));
}

inline ExchangeMatrix path3() { return ExchangeMatrix::quiver({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline ExchangeMatrix cycle3() { return ExchangeMatrix::quiver({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }

/// Oriented unit n-cycle 1 -> 2 -> ... -> n -> 1.
inline ExchangeMatrix oriented_cycle(Index n)
{
    std::vector<Diagram::Edge> arrows;
    for (Index i = 0; i < n; ++i) arrows.push_back({i, (i + 1) % n, 1});
    return quiver_from_arrows(n, arrows);
}

inline ExchangeMatrix b3() { return ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}, {1, 1, 2}); }

/// Unit complete quiver on 4 vertices, arrows from lower to higher index.
inline ExchangeMatrix k4()
{
    return ExchangeMatrix::quiver({{0, 1, 1, 1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {-1, -1, -1, 0}});
}

/// (3,4,4) Coxeter triangle: m_12 = 3, m_23 = 4, m_13 = 4.
inline CoxeterMatrix triangle_344()
{
    CoxeterMatrix c(3);
    c.set(0, 1, 3);
    c.set(1, 2, 4);
    c.set(0, 2, 4);
    return c;
}

inline CoxeterMatrix unit_cycle_coxeter(Index n)
{
    CoxeterMatrix c(n);
    for (Index i = 0; i < n; ++i) c.set(i, (i + 1) % n, 3);
    return c;
}

} // namespace coxmut::testing

#endif // COXMUT_TESTS_SUPPORT_HPP
