#ifndef COXMUT_GRAM_HPP
#define COXMUT_GRAM_HPP

// Gram matrices of Coxeter systems over Q(sqrt2, sqrt3), exact signatures,
// the spherical/Euclidean/hyperbolic trichotomy, and the elliptic and ideal
// vertex subsets used for Euler characteristics and cusps.

#include "catalogue.hpp"
#include "coxeter_matrix.hpp"
#include "quadfield.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace coxmut {

class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(Index n) : n_(n), g_(n * n) {}

    Index size() const noexcept { return n_; }
    const QuadField& operator()(Index i, Index j) const { return g_[i * n_ + j]; }
    QuadField& operator()(Index i, Index j) { return g_[i * n_ + j]; }

    GramMatrix submatrix(const std::vector<Index>& vs) const
    {
        GramMatrix out(vs.size());
        for (Index a = 0; a < vs.size(); ++a)
            for (Index b = 0; b < vs.size(); ++b) out(a, b) = (*this)(vs[a], vs[b]);
        return out;
    }

private:
    Index n_ = 0;
    std::vector<QuadField> g_;
};

/// -cos(pi/m) for the orders that finite/affine mutation type can produce.
inline QuadField minus_cos_pi_over(int m)
{
    const Rational half(1, 2);
    switch (m) {
    case 2: return QuadField(0);
    case 3: return QuadField(-half, 0, 0, 0);
    case 4: return QuadField(0, -half, 0, 0);
    case 6: return QuadField(0, 0, -half, 0);
    case CoxeterMatrix::kInfinity: return QuadField(-1);
    default: throw InvalidInput("gram matrix: unsupported order m=" + std::to_string(m) + " (need 2,3,4,6,inf)");
    }
}

inline GramMatrix gram_matrix(const CoxeterMatrix& c)
{
    GramMatrix g(c.size());
    for (Index i = 0; i < c.size(); ++i)
        for (Index j = 0; j < c.size(); ++j) g(i, j) = i == j ? QuadField(1) : minus_cos_pi_over(c(i, j));
    return g;
}

struct Signature {
    Index positive = 0;
    Index zero = 0;
    Index negative = 0;

    Index rank() const { return positive + negative; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia by symmetric congruence reduction (Sylvester). With `rng`, the
/// pivot is chosen at random among admissible ones.
inline Signature signature(const GramMatrix& m, std::mt19937* rng = nullptr)
{
    const Index n = m.size();
    std::vector<QuadField> a(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    auto at = [&](Index i, Index j) -> QuadField& { return a[i * n + j]; };

    std::vector<Index> active(n);
    for (Index i = 0; i < n; ++i) active[i] = i;
    Signature s;
    while (!active.empty()) {
        std::vector<std::size_t> pivots;
        for (std::size_t t = 0; t < active.size(); ++t)
            if (!at(active[t], active[t]).is_zero()) {
                pivots.push_back(t);
                if (!rng) break;
            }
        if (pivots.empty()) {
            // Zero diagonal: fold a column j with A_ij != 0 into i, making A_ii = 2 A_ij.
            bool folded = false;
            for (std::size_t t = 0; t < active.size() && !folded; ++t)
                for (std::size_t u = 0; u < active.size() && !folded; ++u) {
                    const Index i = active[t], j = active[u];
                    if (i == j || at(i, j).is_zero()) continue;
                    for (Index k : active) at(i, k) += at(j, k);
                    for (Index k : active) at(k, i) = at(i, k);
                    at(i, i) = at(i, i) + at(j, i);
                    folded = true;
                }
            if (!folded) {
                s.zero += active.size();
                break;
            }
            continue;
        }
        const std::size_t pt = rng ? pivots[std::uniform_int_distribution<std::size_t>(0, pivots.size() - 1)(*rng)]
                                   : pivots.front();
        const Index p = active[pt];
        const QuadField piv = at(p, p);
        (piv.sign() > 0 ? s.positive : s.negative) += 1;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pt));
        const QuadField inv = piv.inverse();
        for (Index j : active) {
            if (at(j, p).is_zero()) continue;
            const QuadField f = at(j, p) * inv;
            for (Index k : active) at(j, k) -= f * at(p, k);
        }
    }
    return s;
}

struct GeometricType {
    enum class Kind { Spherical, Euclidean, Hyperbolic, Other };
    Kind kind = Kind::Other;
    Signature signature;
    Index dimension = 0; ///< dimension of the space acted on; 0 for Other

    std::string name() const
    {
        switch (kind) {
        case Kind::Spherical: return "Spherical";
        case Kind::Euclidean: return "Euclidean";
        case Kind::Hyperbolic: return "Hyperbolic";
        case Kind::Other: break;
        }
        return "Other";
    }
};

/// Spherical: positive definite. Euclidean: indecomposable, signature (n-1,1,0).
/// Hyperbolic: indecomposable with exactly one negative square; the action is
/// on H^p (p = n-1 when the Gram matrix is nondegenerate).
inline GeometricType geometric_type(const CoxeterMatrix& c)
{
    GeometricType t;
    t.signature = signature(gram_matrix(c));
    const Index n = c.size();
    const auto& s = t.signature;
    const bool connected = c.connected();
    if (s.negative == 0 && s.zero == 0) {
        t.kind = GeometricType::Kind::Spherical;
        t.dimension = n - 1;
    } else if (connected && s.negative == 0 && s.zero == 1) {
        t.kind = GeometricType::Kind::Euclidean;
        t.dimension = n - 1;
    } else if (connected && s.negative == 1) {
        t.kind = GeometricType::Kind::Hyperbolic;
        t.dimension = s.positive;
    }
    return t;
}

/// A vertex subset with the catalogue classification of its subdiagram.
struct VertexSubset {
    std::vector<Index> vertices;
    ComponentClassification classification;
};

namespace detail {

inline std::vector<Index> bits_to_vertices(std::uint64_t mask, Index n)
{
    std::vector<Index> out;
    for (Index i = 0; i < n; ++i)
        if (mask >> i & 1u) out.push_back(i);
    return out;
}

inline void require_small(Index n)
{
    if (n > 24) throw CapExceeded("subset enumeration limited to rank <= 24");
}

} // namespace detail

/// Subsets (including the empty one) whose Gram submatrix is positive definite.
inline std::vector<VertexSubset> elliptic_subsets(const CoxeterMatrix& c)
{
    const Index n = c.size();
    detail::require_small(n);
    const GramMatrix g = gram_matrix(c);
    std::vector<bool> elliptic(std::size_t{1} << n, false);
    std::vector<VertexSubset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        // Positive definiteness is inherited by subsets; skip masks with a non-elliptic facet.
        bool possible = true;
        for (Index i = 0; i < n && possible; ++i)
            if ((mask >> i & 1u) && !elliptic[mask & ~(std::uint64_t{1} << i)]) possible = false;
        if (!possible) continue;
        auto vs = detail::bits_to_vertices(mask, n);
        const auto s = signature(g.submatrix(vs));
        if (s.zero != 0 || s.negative != 0) continue;
        elliptic[mask] = true;
        VertexSubset sub{vs, classify_components(c.submatrix(vs))};
        if (!sub.classification.order)
            throw std::logic_error("positive definite subdiagram not found in the finite catalogue");
        out.push_back(std::move(sub));
    }
    return out;
}

/// Subsets with positive semidefinite Gram of rank dimension-1 whose
/// components are all affine. Requires a hyperbolic Coxeter matrix.
inline std::vector<VertexSubset> ideal_vertex_subsets(const CoxeterMatrix& c, Index dimension)
{
    if (geometric_type(c).kind != GeometricType::Kind::Hyperbolic)
        throw WrongType("ideal vertex subsets require a hyperbolic Coxeter group");
    const Index n = c.size();
    detail::require_small(n);
    const GramMatrix g = gram_matrix(c);
    std::vector<VertexSubset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto vs = detail::bits_to_vertices(mask, n);
        if (vs.size() < dimension - 1) continue;
        const auto s = signature(g.submatrix(vs));
        if (s.negative != 0 || s.positive != dimension - 1) continue;
        auto cls = classify_components(c.submatrix(vs));
        if (!cls.all_affine()) continue;
        out.push_back({std::move(vs), std::move(cls)});
    }
    return out;
}

/// Finite-volume test for the polytope of a hyperbolic Coxeter matrix acting
/// on H^d: every elliptic subset of size d-1 lies in exactly two subsets that
/// are elliptic of size d or ideal (parabolic of rank d-1).
inline bool finite_volume(const CoxeterMatrix& c, Index dimension)
{
    if (dimension < 2) return false;
    const auto ell = elliptic_subsets(c);
    std::vector<std::uint64_t> vertex_masks;
    auto mask_of = [](const std::vector<Index>& vs) {
        std::uint64_t m = 0;
        for (Index v : vs) m |= std::uint64_t{1} << v;
        return m;
    };
    for (const auto& s : ell)
        if (s.vertices.size() == dimension) vertex_masks.push_back(mask_of(s.vertices));
    for (const auto& s : ideal_vertex_subsets(c, dimension)) vertex_masks.push_back(mask_of(s.vertices));
    if (vertex_masks.empty()) return false;
    for (const auto& s : ell) {
        if (s.vertices.size() != dimension - 1) continue;
        const auto m = mask_of(s.vertices);
        const auto n = std::count_if(vertex_masks.begin(), vertex_masks.end(),
                                     [&](std::uint64_t v) { return (v & m) == m; });
        if (n != 2) return false;
    }
    return true;
}

} // namespace coxmut

#endif // COXMUT_GRAM_HPP
