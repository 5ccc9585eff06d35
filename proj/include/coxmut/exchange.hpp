#ifndef COXMUT_EXCHANGE_HPP
#define COXMUT_EXCHANGE_HPP

// Exchange matrices, their diagrams, and matrix mutation.
//
// Vertices are 0-based inside the library. Every external surface (JSON
// files, presentation text, CLI flags, HTTP bodies) is 1-based and converts
// at the boundary.

#include "errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coxmut {

using Index = std::size_t;

/// Skew-symmetrizable integer matrix B with symmetrizer D = diag(d).
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;

    /// Row-major entries; throws InvalidInput naming the first violated invariant.
    ExchangeMatrix(Index n, std::vector<std::int64_t> b, std::vector<std::int64_t> d)
        : n_(n), b_(std::move(b)), d_(std::move(d))
    {
        validate();
    }

    /// Skew-symmetric (quiver) matrix, symmetrizer all ones.
    static ExchangeMatrix quiver(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    {
        return from_rows(rows, {});
    }

    static ExchangeMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                    std::vector<std::int64_t> d)
    {
        const Index n = rows.size();
        std::vector<std::int64_t> b;
        b.reserve(n * n);
        for (const auto& r : rows) {
            if (r.size() != n) throw InvalidInput("shape: matrix must be square");
            b.insert(b.end(), r.begin(), r.end());
        }
        if (d.empty()) d.assign(n, 1);
        return ExchangeMatrix(n, std::move(b), std::move(d));
    }

    Index rank() const noexcept { return n_; }
    std::int64_t operator()(Index i, Index j) const { return b_[i * n_ + j]; }
    std::int64_t symmetrizer(Index i) const { return d_[i]; }
    std::span<const std::int64_t> entries() const noexcept { return b_; }
    std::span<const std::int64_t> symmetrizer() const noexcept { return d_; }

    bool is_skew_symmetric() const
    {
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    void validate() const
    {
        if (n_ == 0) throw InvalidInput("rank: n must be positive");
        if (b_.size() != n_ * n_) throw InvalidInput("shape: b must be an n x n matrix");
        if (d_.size() != n_) throw InvalidInput("shape: d must have n entries");
        for (Index i = 0; i < n_; ++i)
            if (d_[i] <= 0) throw InvalidInput("symmetrizer: d_" + std::to_string(i + 1) + " must be positive");
        for (Index i = 0; i < n_; ++i)
            if ((*this)(i, i) != 0)
                throw InvalidInput("diagonal: b_ii = 0 violated at i=" + std::to_string(i + 1));
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j) {
                const auto bij = (*this)(i, j);
                const auto bji = (*this)(j, i);
                const auto loc = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                if ((bij == 0) != (bji == 0))
                    throw InvalidInput("sign pattern: b_ij = 0 <=> b_ji = 0 violated at " + loc);
                if (bij * d_[j] != -bji * d_[i])
                    throw InvalidInput("skew-symmetrizability: b_ij*d_j = -b_ji*d_i violated at " + loc);
            }
    }

    Index n_ = 0;
    std::vector<std::int64_t> b_;
    std::vector<std::int64_t> d_;
};

/// Ordered list of mutation directions (0-based).
struct MutationSequence {
    std::vector<Index> steps;

    MutationSequence() = default;
    MutationSequence(std::initializer_list<Index> s) : steps(s) {}
    explicit MutationSequence(std::vector<Index> s) : steps(std::move(s)) {}

    std::size_t size() const noexcept { return steps.size(); }
    bool empty() const noexcept { return steps.empty(); }
    auto begin() const noexcept { return steps.begin(); }
    auto end() const noexcept { return steps.end(); }

    MutationSequence reversed() const { return MutationSequence(std::vector<Index>(steps.rbegin(), steps.rend())); }

    MutationSequence then(Index k) const
    {
        auto s = steps;
        s.push_back(k);
        return MutationSequence(std::move(s));
    }

    friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("integer overflow in mutation");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("integer overflow in mutation");
    return r;
}

} // namespace detail

/// Matrix mutation in direction k.
inline ExchangeMatrix mutate(const ExchangeMatrix& m, Index k)
{
    const Index n = m.rank();
    if (k >= n)
        throw InvalidInput("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
    std::vector<std::int64_t> b(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == k || j == k) {
                b[i * n + j] = -m(i, j);
                continue;
            }
            const auto bik = m(i, k);
            const auto bkj = m(k, j);
            const auto twice = detail::checked_add(detail::checked_mul(std::llabs(bik), bkj),
                                                   detail::checked_mul(bik, std::llabs(bkj)));
            b[i * n + j] = detail::checked_add(m(i, j), twice / 2);
        }
    return ExchangeMatrix(n, std::move(b), std::vector<std::int64_t>(m.symmetrizer().begin(), m.symmetrizer().end()));
}

inline ExchangeMatrix mutate(const ExchangeMatrix& m, const MutationSequence& seq)
{
    ExchangeMatrix cur = m;
    for (Index k : seq) cur = mutate(cur, k);
    return cur;
}

/// Labeled directed graph; label of i->j is |b_ij * b_ji|.
class Diagram {
public:
    struct Edge {
        Index from;
        Index to;
        std::int64_t weight;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    Diagram() = default;

    /// Builds from edges; throws on loops, duplicate pairs or non-positive labels.
    Diagram(Index n, const std::vector<Edge>& edges) : n_(n), code_(n * n, 0)
    {
        for (const auto& e : edges) {
            if (e.from >= n || e.to >= n) throw InvalidInput("diagram edge endpoint out of range");
            if (e.from == e.to) throw InvalidInput("diagram: loops are not allowed");
            if (e.weight <= 0) throw InvalidInput("diagram: labels must be positive");
            if (code_[e.from * n + e.to] != 0) throw InvalidInput("diagram: at most one edge per pair");
            code_[e.from * n + e.to] = e.weight;
            code_[e.to * n + e.from] = -e.weight;
        }
    }

    Index size() const noexcept { return n_; }

    /// Undirected label, 0 when not adjacent.
    std::int64_t weight(Index i, Index j) const { return std::llabs(code_[i * n_ + j]); }
    bool adjacent(Index i, Index j) const { return code_[i * n_ + j] != 0; }
    bool has_arrow(Index i, Index j) const { return code_[i * n_ + j] > 0; }

    /// +w for i->j, -w for j->i, 0 otherwise.
    std::int64_t signed_label(Index i, Index j) const { return code_[i * n_ + j]; }
    std::span<const std::int64_t> code() const noexcept { return code_; }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j)
                if (code_[i * n_ + j] > 0) out.push_back({i, j, code_[i * n_ + j]});
        return out;
    }

    std::int64_t max_weight() const
    {
        std::int64_t w = 0;
        for (auto c : code_) w = std::max(w, c);
        return w;
    }

    bool connected() const
    {
        if (n_ == 0) return true;
        std::vector<bool> seen(n_, false);
        std::vector<Index> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            for (Index u = 0; u < n_; ++u)
                if (!seen[u] && adjacent(v, u)) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n_;
    }

    /// No oriented cycle at all (not only chordless ones).
    bool acyclic() const
    {
        std::vector<int> indeg(n_, 0);
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j)
                if (has_arrow(i, j)) ++indeg[j];
        std::vector<Index> ready;
        for (Index i = 0; i < n_; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        std::size_t done = 0;
        while (!ready.empty()) {
            Index v = ready.back();
            ready.pop_back();
            ++done;
            for (Index j = 0; j < n_; ++j)
                if (has_arrow(v, j) && --indeg[j] == 0) ready.push_back(j);
        }
        return done == n_;
    }

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    Index n_ = 0;
    std::vector<std::int64_t> code_;
};

inline Diagram diagram_view(const ExchangeMatrix& m)
{
    std::vector<Diagram::Edge> edges;
    for (Index i = 0; i < m.rank(); ++i)
        for (Index j = 0; j < m.rank(); ++j)
            if (m(i, j) > 0) edges.push_back({i, j, std::llabs(m(i, j) * m(j, i))});
    return Diagram(m.rank(), edges);
}

/// Skew-symmetric matrix of a quiver given by arrows with multiplicities.
inline ExchangeMatrix quiver_from_arrows(Index n, const std::vector<Diagram::Edge>& arrows)
{
    std::vector<std::int64_t> b(n * n, 0);
    for (const auto& a : arrows) {
        if (a.from >= n || a.to >= n || a.from == a.to) throw InvalidInput("bad arrow");
        b[a.from * n + a.to] += a.weight;
        b[a.to * n + a.from] -= a.weight;
    }
    return ExchangeMatrix(n, std::move(b), std::vector<std::int64_t>(n, 1));
}

} // namespace coxmut

#endif // COXMUT_EXCHANGE_HPP
