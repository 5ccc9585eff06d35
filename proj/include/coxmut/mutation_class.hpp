#ifndef COXMUT_MUTATION_CLASS_HPP
#define COXMUT_MUTATION_CLASS_HPP

// Breadth-first enumeration of mutation classes and mutation-type
// classification.

#include "canonical.hpp"
#include "catalogue.hpp"
#include "exchange.hpp"
#include "presentation.hpp"

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxmut {

/// Key of an exchange matrix up to simultaneous permutation of rows and
/// columns. Uses the signed entries b_ij, so the symmetrizer is implied.
inline CanonicalKey matrix_key(const ExchangeMatrix& m) { return canonical_key(m.rank(), m.entries()); }

struct ClassCaps {
    std::size_t max_size = 100000;
    std::int64_t max_weight = 4;
};

struct ClassMember {
    ExchangeMatrix matrix;
    MutationSequence witness; ///< from the starting matrix to this one
    CanonicalKey key;
};

struct ClassEnumeration {
    enum class Status { Complete, SizeExceeded, WeightExceeded };

    std::vector<ClassMember> members; ///< BFS order; members[0] is the input
    Status status = Status::Complete;
    std::optional<std::size_t> heavy_member; ///< index of a member with an edge label above max_weight

    bool complete() const { return status == Status::Complete; }

    std::string report() const
    {
        switch (status) {
        case Status::Complete: return "complete: " + std::to_string(members.size()) + " members";
        case Status::SizeExceeded: return "size cap exceeded after " + std::to_string(members.size()) + " members";
        case Status::WeightExceeded:
            return "edge label " + std::to_string(diagram_view(members[*heavy_member].matrix).max_weight()) +
                   " found in the class";
        }
        return {};
    }
};

/// Closure under all mutations, one member per isomorphism class. Edge labels
/// above caps.max_weight only stop the search at rank >= 3.
inline ClassEnumeration mutation_class(const ExchangeMatrix& m, ClassCaps caps = {})
{
    ClassEnumeration out;
    std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen;
    auto add = [&](ExchangeMatrix mat, MutationSequence w, CanonicalKey key) {
        seen.emplace(key, out.members.size());
        out.members.push_back({std::move(mat), std::move(w), std::move(key)});
        const auto& back = out.members.back();
        if (back.matrix.rank() >= 3 && diagram_view(back.matrix).max_weight() > caps.max_weight) {
            out.status = ClassEnumeration::Status::WeightExceeded;
            out.heavy_member = out.members.size() - 1;
            return false;
        }
        return true;
    };
    if (!add(m, {}, matrix_key(m))) return out;
    for (std::size_t q = 0; q < out.members.size(); ++q) {
        for (Index k = 0; k < m.rank(); ++k) {
            // Copies: add() may reallocate members.
            ExchangeMatrix next = mutate(out.members[q].matrix, k);
            auto key = matrix_key(next);
            if (seen.count(key)) continue;
            if (out.members.size() >= caps.max_size) {
                out.status = ClassEnumeration::Status::SizeExceeded;
                return out;
            }
            if (!add(std::move(next), out.members[q].witness.then(k), std::move(key))) return out;
        }
    }
    return out;
}

struct MutationType {
    enum class Kind { FiniteType, AffineType, OtherMutationFinite, MutationInfinite };

    Kind kind = Kind::OtherMutationFinite;
    CoxeterType type;                        ///< Dynkin or affine type, when found
    MutationSequence witness;                ///< input -> representative
    std::optional<ExchangeMatrix> representative; ///< Dynkin/affine orientation, or the heavy member
    std::size_t class_size = 0;
    std::string certificate;

    std::string name() const
    {
        switch (kind) {
        case Kind::FiniteType: return "FiniteType";
        case Kind::AffineType: return "AffineType";
        case Kind::OtherMutationFinite: return "OtherMutationFinite";
        case Kind::MutationInfinite: return "MutationInfinite";
        }
        return {};
    }

    std::string label() const
    {
        return (kind == Kind::FiniteType || kind == Kind::AffineType) ? type.label() : name();
    }
};

inline MutationType classify_mutation_type(const ExchangeMatrix& m, ClassCaps caps = {})
{
    const Diagram g = diagram_view(m);
    if (!g.connected()) throw InvalidInput("classify: diagram is not connected");
    MutationType out;
    if (m.rank() <= 2 && g.max_weight() > 4) {
        out.kind = MutationType::Kind::OtherMutationFinite;
        out.class_size = 1;
        out.certificate = "rank 2: every mutation reverses the single edge";
        return out;
    }
    const auto cls = mutation_class(m, caps);
    out.class_size = cls.members.size();
    if (!cls.complete()) {
        out.kind = MutationType::Kind::MutationInfinite;
        out.certificate = cls.report();
        if (cls.heavy_member) {
            out.representative = cls.members[*cls.heavy_member].matrix;
            out.witness = cls.members[*cls.heavy_member].witness;
        }
        return out;
    }
    std::optional<std::size_t> affine;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
        const Diagram d = diagram_view(cls.members[i].matrix);
        if (!d.acyclic()) continue;
        const auto t = catalogue::recognise(coxeter_data(d));
        if (t.kind == ComponentKind::Finite) {
            out.kind = MutationType::Kind::FiniteType;
            out.type = t;
            out.witness = cls.members[i].witness;
            out.representative = cls.members[i].matrix;
            out.certificate = "acyclic member of finite type " + t.label();
            return out;
        }
        if (t.kind == ComponentKind::Affine && !affine) affine = i;
    }
    if (affine) {
        const auto& mem = cls.members[*affine];
        out.kind = MutationType::Kind::AffineType;
        out.type = catalogue::recognise(coxeter_data(diagram_view(mem.matrix)));
        out.witness = mem.witness;
        out.representative = mem.matrix;
        out.certificate = "acyclic member of affine type " + out.type.label();
        return out;
    }
    out.kind = MutationType::Kind::OtherMutationFinite;
    out.certificate = cls.report();
    return out;
}

/// An acyclic exchange matrix whose diagram has Coxeter data `c` (a forest
/// or a cycle). Edges are oriented from the lower to the higher index. For
/// labels 4 and 6 the symmetrizer grows away from vertex 0 of each component.
inline ExchangeMatrix orientation_of(const CoxeterMatrix& c)
{
    const Index n = c.size();
    auto weight = [&](Index i, Index j) -> std::int64_t {
        switch (c(i, j)) {
        case 2: return 0;
        case 3: return 1;
        case 4: return 2;
        case 6: return 3;
        case CoxeterMatrix::kInfinity: return 4;
        default: throw InvalidInput("orientation: order " + std::to_string(c(i, j)) + " has no diagram label");
        }
    };
    std::vector<std::int64_t> d(n, 0);
    for (Index s = 0; s < n; ++s) {
        if (d[s] != 0) continue;
        d[s] = 1;
        std::vector<Index> stack{s};
        while (!stack.empty()) {
            const Index v = stack.back();
            stack.pop_back();
            for (Index u = 0; u < n; ++u) {
                if (u == v || d[u] != 0) continue;
                const auto w = weight(v, u);
                if (w == 0) continue;
                d[u] = (w == 2 || w == 3) ? d[v] * w : d[v];
                stack.push_back(u);
            }
        }
    }
    std::vector<std::int64_t> b(n * n, 0);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const auto w = weight(i, j);
            if (w == 0) continue;
            std::int64_t bij = 0, bji = 0;
            if (d[i] == d[j]) {
                if (w == 1) bij = 1, bji = -1;
                else if (w == 4) bij = 2, bji = -2;
                else throw InvalidInput("orientation: symmetrizer cannot realise label " + std::to_string(w));
            } else if (d[j] == w * d[i]) {
                bij = 1, bji = -w;
            } else if (d[i] == w * d[j]) {
                bij = w, bji = -1;
            } else {
                throw InvalidInput("orientation: Coxeter graph is not symmetrizable with these labels");
            }
            b[i * n + j] = bij;
            b[j * n + i] = bji;
        }
    return ExchangeMatrix(n, std::move(b), std::move(d));
}

/// Dynkin orientation of a finite type, e.g. dynkin_orientation("E", 8).
inline ExchangeMatrix dynkin_orientation(const std::string& family, Index rank)
{
    return orientation_of(catalogue::finite(family, rank));
}

} // namespace coxmut

#endif // COXMUT_MUTATION_CLASS_HPP
