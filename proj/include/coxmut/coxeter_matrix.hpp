#ifndef COXMUT_COXETER_MATRIX_HPP
#define COXMUT_COXETER_MATRIX_HPP

#include "exchange.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxmut {

/// Symmetric table of orders m_ij of s_i s_j; m_ii = 1, kInfinity for no relation.
class CoxeterMatrix {
public:
    static constexpr int kInfinity = 0;

    CoxeterMatrix() = default;

    explicit CoxeterMatrix(Index n) : n_(n), m_(n * n, 2)
    {
        for (Index i = 0; i < n; ++i) m_[i * n + i] = 1;
    }

    CoxeterMatrix(Index n, std::vector<int> m) : n_(n), m_(std::move(m))
    {
        if (m_.size() != n * n) throw InvalidInput("coxeter matrix: wrong shape");
        for (Index i = 0; i < n; ++i) {
            if (at(i, i) != 1) throw InvalidInput("coxeter matrix: diagonal must be 1");
            for (Index j = 0; j < n; ++j) {
                if (at(i, j) != at(j, i)) throw InvalidInput("coxeter matrix: not symmetric");
                if (i != j && at(i, j) != kInfinity && at(i, j) < 2)
                    throw InvalidInput("coxeter matrix: off-diagonal entries must be >= 2 or infinity");
            }
        }
    }

    Index size() const noexcept { return n_; }
    int operator()(Index i, Index j) const { return at(i, j); }
    bool infinite(Index i, Index j) const { return at(i, j) == kInfinity; }

    /// Edge of the Coxeter graph (m_ij != 2).
    bool joined(Index i, Index j) const { return i != j && at(i, j) != 2; }

    void set(Index i, Index j, int m)
    {
        if (i == j) throw InvalidInput("coxeter matrix: cannot set diagonal");
        if (m != kInfinity && m < 2) throw InvalidInput("coxeter matrix: bad order");
        m_[i * n_ + j] = m;
        m_[j * n_ + i] = m;
    }

    CoxeterMatrix submatrix(const std::vector<Index>& vertices) const
    {
        CoxeterMatrix out(vertices.size());
        for (Index a = 0; a < vertices.size(); ++a)
            for (Index b = 0; b < vertices.size(); ++b)
                if (a != b) out.m_[a * vertices.size() + b] = at(vertices[a], vertices[b]);
        return out;
    }

    /// Connected components of the Coxeter graph, each sorted.
    std::vector<std::vector<Index>> components() const
    {
        std::vector<int> comp(n_, -1);
        std::vector<std::vector<Index>> out;
        for (Index s = 0; s < n_; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<Index> members{s};
            comp[s] = static_cast<int>(out.size());
            for (std::size_t q = 0; q < members.size(); ++q)
                for (Index u = 0; u < n_; ++u)
                    if (comp[u] < 0 && joined(members[q], u)) {
                        comp[u] = static_cast<int>(out.size());
                        members.push_back(u);
                    }
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        return out;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

    /// Code matrix for canonical forms: 0 = no edge (m=2), -1 = infinity.
    std::vector<std::int64_t> graph_code() const
    {
        std::vector<std::int64_t> code(n_ * n_, 0);
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j)
                if (joined(i, j)) code[i * n_ + j] = infinite(i, j) ? -1 : at(i, j);
        return code;
    }

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    int at(Index i, Index j) const { return m_[i * n_ + j]; }

    Index n_ = 0;
    std::vector<int> m_;
};

inline std::string order_to_string(int m) { return m == CoxeterMatrix::kInfinity ? "inf" : std::to_string(m); }

} // namespace coxmut

#endif // COXMUT_COXETER_MATRIX_HPP
