#ifndef COXMUT_AFFINE_HPP
#define COXMUT_AFFINE_HPP

// Affine Weyl groups as groups of integer affine maps x -> A x + v.
//
// The group acts linearly on the affine root lattice, s_i(x) = x - (A x)_i e_i
// with A the generalized Cartan matrix, fixing the null root delta. Choosing a
// node p with delta_p = 1, the basis {alpha_j (j != p), delta} is unimodular
// and every element has block form [[A', 0], [w^T, 1]]. The contragredient
// action on the dual coordinates is then the affine map y -> A'^T y + w.

#include "catalogue.hpp"
#include "roots.hpp"

#include <map>
#include <unordered_set>

namespace coxmut {

using IntMatrix = std::vector<std::int64_t>; // square, row-major

struct AffineMap {
    Index dim = 0;
    IntMatrix a; ///< dim x dim
    IntVector v;

    static AffineMap identity(Index d)
    {
        AffineMap m{d, IntMatrix(d * d, 0), IntVector(d, 0)};
        for (Index i = 0; i < d; ++i) m.a[i * d + i] = 1;
        return m;
    }

    std::int64_t operator()(Index i, Index j) const { return a[i * dim + j]; }

    bool linear_part_is_identity() const { return *this == AffineMap{dim, identity(dim).a, v}; }
    bool is_identity() const { return *this == identity(dim); }

    /// (f * g)(x) = f(g(x)).
    friend AffineMap operator*(const AffineMap& f, const AffineMap& g)
    {
        const Index d = f.dim;
        AffineMap out{d, IntMatrix(d * d, 0), f.v};
        for (Index i = 0; i < d; ++i)
            for (Index k = 0; k < d; ++k) {
                const auto fik = f(i, k);
                if (fik == 0) continue;
                for (Index j = 0; j < d; ++j) out.a[i * d + j] += fik * g(k, j);
                out.v[i] += fik * g.v[k];
            }
        return out;
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct AffineMapHash {
    std::size_t operator()(const AffineMap& m) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&](std::int64_t x) { h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull; };
        for (auto x : m.a) mix(x);
        for (auto x : m.v) mix(x);
        return h;
    }
};

struct AffineRep {
    CoxeterMatrix coxeter;
    Index special_node = 0; ///< the node p with delta_p = 1
    IntVector null_root;    ///< delta in the simple-root basis
    std::vector<AffineMap> generators;

    Index size() const noexcept { return generators.size(); }
};

namespace detail {

/// Primitive positive integer kernel vector of an affine Cartan matrix.
inline IntVector null_root(const CartanMatrix& a)
{
    const Index n = a.size();
    // Solve A x = 0 with x_0 = 1 over Q by elimination on the remaining columns.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 1; j < n; ++j) m[i][j - 1] = a(i, j);
        m[i][n - 1] = -a(i, 0); // right-hand side column
    }
    const Index cols = n - 1;
    Index row = 0;
    std::vector<Index> pivot_col;
    for (Index c = 0; c < cols && row < n; ++c) {
        Index p = row;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][c];
        for (Index k = 0; k <= cols; ++k) m[row][k] *= inv;
        for (Index r = 0; r < n; ++r)
            if (r != row && m[r][c] != 0) {
                const Rational f = m[r][c];
                for (Index k = 0; k <= cols; ++k) m[r][k] -= f * m[row][k];
            }
        pivot_col.push_back(c);
        ++row;
    }
    if (pivot_col.size() != cols) throw InvalidInput("affine rep: Cartan matrix corank is not 1");
    for (Index r = row; r < n; ++r)
        if (m[r][cols] != 0) throw InvalidInput("affine rep: Cartan matrix is nonsingular");
    std::vector<Rational> x(n, 0);
    x[0] = 1;
    for (Index r = 0; r < cols; ++r) x[pivot_col[r] + 1] = m[r][cols];
    BigInt l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector out(n);
    BigInt g = 0;
    for (Index i = 0; i < n; ++i) {
        const Rational v = x[i] * l;
        out[i] = v.get_num().get_si();
        mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(std::llabs(out[i])));
    }
    const auto gg = static_cast<std::int64_t>(g.get_si());
    for (auto& v : out) {
        v /= gg;
        if (v <= 0) throw InvalidInput("affine rep: null root is not positive (not of affine type)");
    }
    return out;
}

} // namespace detail

/// Affine realization with generators indexed like the vertices of `c`,
/// which must be a connected affine Coxeter diagram.
inline AffineRep affine_rep_from_coxeter(const CoxeterMatrix& c)
{
    const auto t = catalogue::recognise(c);
    if (t.kind != ComponentKind::Affine) throw InvalidInput("affine rep: Coxeter diagram is not affine");
    const CartanMatrix cart(c);
    const Index n = c.size();
    AffineRep rep;
    rep.coxeter = c;
    rep.null_root = detail::null_root(cart);
    const auto it = std::find(rep.null_root.begin(), rep.null_root.end(), 1);
    if (it == rep.null_root.end()) throw InvalidInput("affine rep: no node with null-root coefficient 1");
    const Index p = static_cast<Index>(it - rep.null_root.begin());
    rep.special_node = p;
    const auto& delta = rep.null_root;

    // New coordinates: y_j = x_j - x_p delta_j (j != p) in slots 0..n-2, y_delta = x_p last.
    std::vector<Index> slot; // old index -> new slot for j != p
    for (Index j = 0; j < n; ++j)
        if (j != p) slot.push_back(j);
    const Index d = n - 1;
    for (Index i = 0; i < n; ++i) {
        // Linear map s_i on old coordinates.
        auto s_old = [&](const IntVector& x) {
            IntVector y = x;
            std::int64_t c0 = 0;
            for (Index j = 0; j < n; ++j) c0 += cart(i, j) * x[j];
            y[i] -= c0;
            return y;
        };
        auto to_old = [&](const IntVector& y) { // y has n entries: slots then delta
            IntVector x(n, 0);
            x[p] = y[d];
            for (Index k = 0; k < d; ++k) x[slot[k]] = y[k] + y[d] * delta[slot[k]];
            return x;
        };
        auto to_new = [&](const IntVector& x) {
            IntVector y(n, 0);
            y[d] = x[p];
            for (Index k = 0; k < d; ++k) y[k] = x[slot[k]] - x[p] * delta[slot[k]];
            return y;
        };
        // Columns of the new-basis matrix M: images of the basis vectors.
        IntMatrix m(n * n, 0);
        for (Index col = 0; col < n; ++col) {
            IntVector e(n, 0);
            e[col] = 1;
            const auto img = to_new(s_old(to_old(e)));
            for (Index r = 0; r < n; ++r) m[r * n + col] = img[r];
        }
        // M = [[A', 0], [w^T, 1]]; the affine map is (A'^T, w).
        AffineMap g{d, IntMatrix(d * d, 0), IntVector(d, 0)};
        for (Index r = 0; r < d; ++r) {
            if (m[r * n + d] != 0) throw std::logic_error("affine rep: null root not fixed");
            for (Index k = 0; k < d; ++k) g.a[k * d + r] = m[r * n + k];
        }
        for (Index k = 0; k < d; ++k) g.v[k] = m[d * n + k];
        rep.generators.push_back(std::move(g));
    }
    return rep;
}

/// Affine Weyl group of type X~_rank, generators in catalogue order.
inline AffineRep affine_rep(const std::string& family, Index rank)
{
    return affine_rep_from_coxeter(catalogue::affine(family, rank));
}

/// Ordered product; the rightmost letter acts first.
inline AffineMap evaluate_word(const AffineRep& rep, const Word& w)
{
    const Index d = rep.generators.empty() ? 0 : rep.generators.front().dim;
    AffineMap acc = AffineMap::identity(d);
    for (Index x : w) {
        if (x >= rep.size()) throw InvalidInput("evaluate_word: generator index out of range");
        acc = acc * rep.generators[x];
    }
    return acc;
}

/// Order of the group generated by `gens` by closure, or ExceedsCap.
inline GroupOrderResult bounded_closure_order(const std::vector<AffineMap>& gens, std::size_t cap = 100000)
{
    if (gens.empty()) return {BigInt(1), 0};
    std::unordered_set<AffineMap, AffineMapHash> seen;
    std::vector<AffineMap> queue{AffineMap::identity(gens.front().dim)};
    seen.insert(queue.front());
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            AffineMap h = g * queue[q];
            if (seen.count(h)) continue;
            if (seen.size() >= cap) return GroupOrderResult::exceeds(cap);
            seen.insert(h);
            queue.push_back(std::move(h));
        }
    return {BigInt(static_cast<unsigned long>(seen.size())), 0};
}

inline GroupOrderResult subgroup_order(const AffineRep& rep, const std::vector<Word>& words, std::size_t cap = 100000)
{
    std::vector<AffineMap> gens;
    for (const auto& w : words) gens.push_back(evaluate_word(rep, w));
    return bounded_closure_order(gens, cap);
}

/// Rank over Q of a list of integer vectors.
inline Index lattice_rank(const std::vector<IntVector>& vs)
{
    if (vs.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& v : vs) {
        std::vector<Rational> row;
        for (auto x : v) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    const Index cols = m.front().size();
    Index rank = 0;
    for (Index c = 0; c < cols && rank < m.size(); ++c) {
        Index p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (Index r = rank + 1; r < m.size(); ++r)
            if (m[r][c] != 0) {
                const Rational f = m[r][c] / m[rank][c];
                for (Index k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
            }
        ++rank;
    }
    return rank;
}

} // namespace coxmut

#endif // COXMUT_AFFINE_HPP
