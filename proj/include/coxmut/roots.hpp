#ifndef COXMUT_ROOTS_HPP
#define COXMUT_ROOTS_HPP

// Finite root systems in the simple-root basis and the faithful permutation
// representation of a Weyl group on its roots.

#include "catalogue.hpp"
#include "presentation.hpp"
#include "schreier_sims.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace coxmut {

using IntVector = std::vector<std::int64_t>;

/// Generalized Cartan matrix a_ij = <alpha_j, alpha_i^vee> of a Coxeter matrix
/// with orders in {2,3,4,6,inf}. For 4 and 6 the longer root is the one with
/// the larger index.
class CartanMatrix {
public:
    CartanMatrix() = default;

    explicit CartanMatrix(const CoxeterMatrix& c) : n_(c.size()), a_(n_ * n_, 0)
    {
        for (Index i = 0; i < n_; ++i) {
            a_[i * n_ + i] = 2;
            for (Index j = i + 1; j < n_; ++j) {
                std::int64_t aij = 0, aji = 0;
                switch (c(i, j)) {
                case 2: break;
                case 3: aij = aji = -1; break;
                case 4: aij = -1, aji = -2; break;
                case 6: aij = -1, aji = -3; break;
                case CoxeterMatrix::kInfinity: aij = aji = -2; break;
                default:
                    throw InvalidInput("cartan matrix: order " + std::to_string(c(i, j)) +
                                       " is not crystallographic");
                }
                a_[i * n_ + j] = aij;
                a_[j * n_ + i] = aji;
            }
        }
        symmetrize();
    }

    Index size() const noexcept { return n_; }
    std::int64_t operator()(Index i, Index j) const { return a_[i * n_ + j]; }

    /// (alpha_i, alpha_j) = e_i a_ij; symmetric.
    std::int64_t form(Index i, Index j) const { return e_[i] * (*this)(i, j); }

    std::int64_t pairing(const IntVector& x, const IntVector& y) const
    {
        std::int64_t s = 0;
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j) s += x[i] * form(i, j) * y[j];
        return s;
    }

    /// Simple reflection s_i on a vector of simple-root coordinates.
    IntVector reflect(Index i, IntVector x) const
    {
        std::int64_t c = 0;
        for (Index j = 0; j < n_; ++j) c += (*this)(i, j) * x[j];
        x[i] -= c;
        return x;
    }

    /// Reflection in a root beta: x - <x, beta^vee> beta.
    IntVector reflect_in(const IntVector& beta, IntVector x) const
    {
        const std::int64_t bb = pairing(beta, beta);
        const std::int64_t c = 2 * pairing(x, beta);
        if (bb == 0 || c % bb != 0) throw InvalidInput("reflection: vector is not a real root");
        const std::int64_t k = c / bb;
        for (Index j = 0; j < n_; ++j) x[j] -= k * beta[j];
        return x;
    }

private:
    // e_i with e_i a_ij = e_j a_ji; propagated along the graph, then scaled to integers.
    void symmetrize()
    {
        std::vector<Rational> e(n_, 0);
        for (Index s = 0; s < n_; ++s) {
            if (e[s] != 0) continue;
            e[s] = 1;
            std::vector<Index> stack{s};
            while (!stack.empty()) {
                const Index v = stack.back();
                stack.pop_back();
                for (Index u = 0; u < n_; ++u) {
                    if (u == v || (*this)(v, u) == 0) continue;
                    const Rational want = e[v] * (*this)(v, u) / (*this)(u, v);
                    if (e[u] == 0) {
                        e[u] = want;
                        stack.push_back(u);
                    } else if (e[u] != want) {
                        throw InvalidInput("cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        BigInt l = 1;
        for (const auto& x : e) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        e_.resize(n_);
        for (Index i = 0; i < n_; ++i) {
            const Rational v = e[i] * l;
            e_[i] = v.get_num().get_si();
        }
    }

    Index n_ = 0;
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> e_;
};

class RootSystem {
public:
    /// Closure of the simple roots under simple reflections; throws if the
    /// Coxeter matrix is not of finite type.
    explicit RootSystem(const CoxeterMatrix& c, std::size_t max_roots = 100000) : coxeter_(c), cartan_(c)
    {
        const Index n = c.size();
        for (Index i = 0; i < n; ++i) {
            IntVector e(n, 0);
            e[i] = 1;
            insert(std::move(e));
        }
        for (std::size_t q = 0; q < roots_.size(); ++q)
            for (Index i = 0; i < n; ++i) {
                insert(cartan_.reflect(i, roots_[q]));
                if (roots_.size() > max_roots) throw InvalidInput("root system: not of finite type");
            }
        action_.assign(n, std::vector<Point>(roots_.size()));
        for (Index i = 0; i < n; ++i)
            for (std::size_t r = 0; r < roots_.size(); ++r) action_[i][r] = index_.at(cartan_.reflect(i, roots_[r]));
    }

    static RootSystem of_type(const std::string& family, Index rank)
    {
        if (family == "H" || family == "I") throw InvalidInput("root system: type " + family + " is not crystallographic");
        return RootSystem(catalogue::finite(family, rank));
    }

    Index rank() const noexcept { return coxeter_.size(); }
    std::size_t size() const noexcept { return roots_.size(); }
    const std::vector<IntVector>& roots() const noexcept { return roots_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }
    const CoxeterMatrix& coxeter() const noexcept { return coxeter_; }

    bool contains(const IntVector& v) const { return index_.count(v) != 0; }
    Point index_of(const IntVector& v) const
    {
        auto it = index_.find(v);
        if (it == index_.end()) throw InvalidInput("vector is not a root");
        return it->second;
    }

    /// s_i as a permutation of root indices.
    const std::vector<Point>& simple_action(Index i) const { return action_[i]; }

    /// w(v) for a word w (rightmost letter acts first).
    IntVector apply(const Word& w, IntVector v) const
    {
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = cartan_.reflect(*it, std::move(v));
        return v;
    }

    static bool is_positive(const IntVector& v)
    {
        return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
    }

    static IntVector positive(IntVector v)
    {
        if (!is_positive(v))
            for (auto& x : v) x = -x;
        return v;
    }

private:
    void insert(IntVector v)
    {
        if (index_.count(v)) return;
        index_.emplace(v, static_cast<Point>(roots_.size()));
        roots_.push_back(std::move(v));
    }

    CoxeterMatrix coxeter_;
    CartanMatrix cartan_;
    std::vector<IntVector> roots_;
    std::map<IntVector, Point> index_;
    std::vector<std::vector<Point>> action_;
};

/// A group given by generator permutations on the roots of a root system.
struct PermutationRep {
    std::size_t degree = 0;
    std::vector<Perm> generators;

    Index size() const noexcept { return generators.size(); }
};

inline PermutationRep permutation_rep(const RootSystem& rs)
{
    PermutationRep rep;
    rep.degree = rs.size();
    for (Index i = 0; i < rs.rank(); ++i) rep.generators.emplace_back(rs.simple_action(i));
    return rep;
}

/// Reflection in an arbitrary root, as a permutation of the roots.
inline Perm reflection_perm(const RootSystem& rs, const IntVector& beta)
{
    if (!rs.contains(beta)) throw InvalidInput("reflection_perm: vector is not a root");
    std::vector<Point> img(rs.size());
    for (std::size_t r = 0; r < rs.size(); ++r) img[r] = rs.index_of(rs.cartan().reflect_in(beta, rs.roots()[r]));
    return Perm(std::move(img));
}

/// Representation of a custom generating set: reflections in the given roots.
inline PermutationRep reflection_rep(const RootSystem& rs, const std::vector<IntVector>& roots)
{
    PermutationRep rep;
    rep.degree = rs.size();
    for (const auto& b : roots) rep.generators.push_back(reflection_perm(rs, b));
    return rep;
}

/// Ordered product; the rightmost letter acts first.
inline Perm evaluate_word(const PermutationRep& rep, const Word& w)
{
    std::vector<Point> img(rep.degree);
    for (std::size_t x = 0; x < rep.degree; ++x) {
        Point p = static_cast<Point>(x);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            if (*it >= rep.size()) throw InvalidInput("evaluate_word: generator index out of range");
            p = rep.generators[*it](p);
        }
        img[x] = p;
    }
    return Perm(std::move(img));
}

inline GroupOrderResult subgroup_order(const PermutationRep& rep, const std::vector<Word>& words,
                                       std::size_t cap = 4096)
{
    std::vector<Perm> gens;
    for (const auto& w : words) gens.push_back(evaluate_word(rep, w));
    return group_order(rep.degree, gens, cap);
}

inline GroupOrderResult group_order(const PermutationRep& rep, std::size_t cap = 4096)
{
    return group_order(rep.degree, rep.generators, cap);
}

struct RelatorReport {
    std::size_t checked = 0;
    std::vector<std::string> failures; ///< relators (in target generators) that do not evaluate to e

    bool all_pass() const { return failures.empty(); }
};

/// Substitutes words[i] for the i-th generator of P and evaluates every relator.
inline RelatorReport verify_relators(const PermutationRep& rep, const GeneratorWords& words, const Presentation& p)
{
    if (words.size() != p.n_generators) throw InvalidInput("verify_relators: generator count mismatch");
    std::vector<Perm> images;
    for (const auto& w : words.words) images.push_back(evaluate_word(rep, w));
    RelatorReport out;
    for (const auto& r : p.relator_words()) {
        Perm acc(rep.degree);
        for (Index x : r) acc = acc * images[x];
        ++out.checked;
        if (!acc.is_identity()) out.failures.push_back(r.to_string("t"));
    }
    return out;
}

} // namespace coxmut

#endif // COXMUT_ROOTS_HPP
