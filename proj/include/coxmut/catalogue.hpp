#ifndef COXMUT_CATALOGUE_HPP
#define COXMUT_CATALOGUE_HPP

// Finite and affine Coxeter diagrams, recognised by labeled-graph isomorphism.

#include "bigint.hpp"
#include "canonical.hpp"
#include "coxeter_matrix.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace coxmut {

enum class ComponentKind { Finite, Affine, Other };

/// Catalogue family letter and rank, e.g. {"E", 8, Finite} or {"A", 2, Affine}.
struct CoxeterType {
    std::string family;
    Index rank = 0;
    ComponentKind kind = ComponentKind::Other;
    int dihedral_order = 0; ///< m for I2(m)

    std::string label() const
    {
        if (kind == ComponentKind::Other) return "Other";
        if (family == "I") return "I2(" + std::to_string(dihedral_order) + ")";
        return family + (kind == ComponentKind::Affine ? "~" : "") + std::to_string(rank);
    }

    friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

namespace catalogue {

inline CoxeterMatrix path(Index n, const std::vector<int>& labels)
{
    CoxeterMatrix c(n);
    for (Index i = 0; i + 1 < n; ++i) c.set(i, i + 1, labels.empty() ? 3 : labels[i]);
    return c;
}

/// Finite Coxeter diagram; throws for unknown (family, rank).
inline CoxeterMatrix finite(const std::string& family, Index n, int dihedral = 0)
{
    auto bad = [&] { return InvalidInput("unsupported finite type " + family + std::to_string(n)); };
    if (family == "A" && n >= 1) return path(n, {});
    if (family == "B" && n >= 2) {
        std::vector<int> l(n - 1, 3);
        l.back() = 4;
        return path(n, l);
    }
    if (family == "C" && n >= 2) return finite("B", n);
    if (family == "D" && n >= 4) {
        CoxeterMatrix out(n);
        for (Index i = 0; i + 2 < n; ++i) out.set(i, i + 1, 3);
        out.set(n - 3, n - 1, 3);
        return out;
    }
    if (family == "E" && n >= 6 && n <= 8) {
        CoxeterMatrix out(n);
        for (Index i = 0; i + 2 < n; ++i) out.set(i, i + 1, 3);
        out.set(2, n - 1, 3);
        return out;
    }
    if (family == "F" && n == 4) return path(4, {3, 4, 3});
    if (family == "G" && n == 2) return path(2, {6});
    if (family == "H" && n == 3) return path(3, {5, 3});
    if (family == "H" && n == 4) return path(4, {5, 3, 3});
    if (family == "I" && n == 2 && dihedral >= 2) return path(2, {dihedral});
    throw bad();
}

/// Affine Coxeter diagram X~_n on n+1 nodes.
inline CoxeterMatrix affine(const std::string& family, Index n)
{
    auto bad = [&] { return InvalidInput("unsupported affine type " + family + "~" + std::to_string(n)); };
    const Index v = n + 1;
    if (family == "A" && n == 1) {
        CoxeterMatrix c(2);
        c.set(0, 1, CoxeterMatrix::kInfinity);
        return c;
    }
    if (family == "A" && n >= 2) {
        CoxeterMatrix c(v);
        for (Index i = 0; i < v; ++i) c.set(i, (i + 1) % v, 3);
        return c;
    }
    if (family == "B" && n >= 3) {
        CoxeterMatrix c(v);
        c.set(0, 2, 3);
        c.set(1, 2, 3);
        for (Index i = 2; i + 1 < v; ++i) c.set(i, i + 1, 3);
        c.set(v - 2, v - 1, 4);
        return c;
    }
    if (family == "C" && n >= 2) {
        std::vector<int> l(n, 3);
        l.front() = 4;
        l.back() = 4;
        return path(v, l);
    }
    if (family == "D" && n >= 4) {
        CoxeterMatrix c(v);
        c.set(0, 2, 3);
        c.set(1, 2, 3);
        for (Index i = 2; i + 3 < v; ++i) c.set(i, i + 1, 3);
        c.set(v - 3, v - 2, 3);
        c.set(v - 3, v - 1, 3);
        return c;
    }
    auto star = [](std::vector<Index> arms) {
        Index total = 1;
        for (auto a : arms) total += a;
        CoxeterMatrix c(total);
        Index next = 1;
        for (auto a : arms) {
            Index prev = 0;
            for (Index k = 0; k < a; ++k, ++next) {
                c.set(prev, next, 3);
                prev = next;
            }
        }
        return c;
    };
    if (family == "E" && n == 6) return star({2, 2, 2});
    if (family == "E" && n == 7) return star({1, 3, 3});
    if (family == "E" && n == 8) return star({1, 2, 5});
    if (family == "F" && n == 4) return path(5, {3, 3, 4, 3});
    if (family == "G" && n == 2) return path(3, {3, 6});
    throw bad();
}

inline BigInt finite_order(const CoxeterType& t)
{
    const auto n = static_cast<unsigned>(t.rank);
    if (t.family == "A") return factorial(n + 1);
    if (t.family == "B" || t.family == "C") return (BigInt(1) << n) * factorial(n);
    if (t.family == "D") return (BigInt(1) << (n - 1)) * factorial(n);
    if (t.family == "E" && n == 6) return BigInt(51840);
    if (t.family == "E" && n == 7) return BigInt(2903040);
    if (t.family == "E" && n == 8) return BigInt(696729600);
    if (t.family == "F") return BigInt(1152);
    if (t.family == "G") return BigInt(12);
    if (t.family == "H" && n == 3) return BigInt(120);
    if (t.family == "H" && n == 4) return BigInt(14400);
    if (t.family == "I") return BigInt(2 * t.dihedral_order);
    throw InvalidInput("no order for " + t.label());
}

namespace detail {

inline std::vector<std::pair<CoxeterType, CoxeterMatrix>> candidates(Index k)
{
    std::vector<std::pair<CoxeterType, CoxeterMatrix>> out;
    auto fin = [&](const std::string& f, Index n) { out.push_back({{f, n, ComponentKind::Finite}, finite(f, n)}); };
    auto aff = [&](const std::string& f, Index n) { out.push_back({{f, n, ComponentKind::Affine}, affine(f, n)}); };
    fin("A", k);
    if (k >= 2) fin("B", k);
    if (k >= 4) fin("D", k);
    if (k >= 6 && k <= 8) fin("E", k);
    if (k == 4) fin("F", 4);
    if (k == 2) fin("G", 2);
    if (k == 3 || k == 4) fin("H", k);
    if (k >= 2) aff("A", k - 1);
    if (k >= 4) aff("B", k - 1);
    if (k >= 3) aff("C", k - 1);
    if (k >= 5) aff("D", k - 1);
    if (k >= 7 && k <= 9) aff("E", k - 1);
    if (k == 5) aff("F", 4);
    if (k == 3) aff("G", 2);
    return out;
}

} // namespace detail

/// Recognise a connected Coxeter diagram.
inline CoxeterType recognise(const CoxeterMatrix& c)
{
    const Index k = c.size();
    if (k == 2 && !c.infinite(0, 1) && c(0, 1) != 3 && c(0, 1) != 4 && c(0, 1) != 6)
        return {"I", 2, ComponentKind::Finite, c(0, 1)};

    static std::mutex mu;
    static std::map<Index, std::map<CanonicalKey, CoxeterType>> table;
    const auto code = c.graph_code();
    const auto key = canonical_key(k, code);
    std::lock_guard lock(mu);
    auto& bucket = table[k];
    if (bucket.empty())
        for (const auto& [type, mat] : detail::candidates(k)) {
            const auto mc = mat.graph_code();
            bucket.emplace(canonical_key(k, mc), type);
        }
    if (auto it = bucket.find(key); it != bucket.end()) return it->second;
    return {};
}

} // namespace catalogue

/// One connected component of a Coxeter diagram with its catalogue type.
struct Component {
    std::vector<Index> vertices;
    CoxeterType type;
    std::optional<BigInt> order; ///< set for finite components
};

struct ComponentClassification {
    std::vector<Component> components;
    std::optional<BigInt> order; ///< product of component orders, when all are finite

    bool all_finite() const
    {
        return std::all_of(components.begin(), components.end(),
                           [](const Component& c) { return c.type.kind == ComponentKind::Finite; });
    }

    bool all_affine() const
    {
        return std::all_of(components.begin(), components.end(),
                           [](const Component& c) { return c.type.kind == ComponentKind::Affine; });
    }

    std::string label() const
    {
        std::string out;
        for (const auto& c : components) {
            if (!out.empty()) out += "+";
            out += c.type.label();
        }
        return out.empty() ? "empty" : out;
    }
};

inline ComponentClassification classify_components(const CoxeterMatrix& c)
{
    ComponentClassification out;
    BigInt total = 1;
    bool finite = true;
    for (auto& verts : c.components()) {
        Component comp;
        comp.type = catalogue::recognise(c.submatrix(verts));
        comp.vertices = std::move(verts);
        if (comp.type.kind == ComponentKind::Finite) {
            comp.order = catalogue::finite_order(comp.type);
            total *= *comp.order;
        } else {
            finite = false;
        }
        out.components.push_back(std::move(comp));
    }
    if (finite) out.order = total;
    return out;
}

} // namespace coxmut

#endif // COXMUT_CATALOGUE_HPP
