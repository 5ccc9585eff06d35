#ifndef COXMUT_MANIFOLD_HPP
#define COXMUT_MANIFOLD_HPP

// Torsion certificates, Euler characteristics, cusp censuses, volumes,
// wall tracking, companion bases and Euclidean quotients.
//
// Cusp counts: W_C is normal in W_0 and the stabilizer of an ideal vertex is
// the standard parabolic (W_0)_T, so the W_C-orbits on the W_0-orbit of that
// vertex are counted by |W| / |pi((W_0)_T)| with pi : W_0 -> W.

#include "affine.hpp"
#include "gram.hpp"
#include "mutation_class.hpp"
#include "roots.hpp"
#include "todd_coxeter.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace coxmut {

/// The Weyl group W of a finite-type class, with the generators of a
/// particular diagram G expressed as words in the simple reflections of a
/// Dynkin orientation D (or as reflections in chosen roots).
struct FiniteRealization {
    CoxeterType weyl_type;
    std::shared_ptr<const RootSystem> roots;
    PermutationRep rep;
    GeneratorWords words; ///< one word per vertex of G
    BigInt order;
    std::optional<ExchangeMatrix> dynkin;
    MutationSequence from_dynkin; ///< D -> G
};

inline FiniteRealization realize_finite(const ExchangeMatrix& dynkin, const MutationSequence& from_dynkin)
{
    FiniteRealization r;
    const CoxeterMatrix c = coxeter_data(diagram_view(dynkin));
    r.weyl_type = catalogue::recognise(c);
    if (r.weyl_type.kind != ComponentKind::Finite) throw WrongType("realization: not a Dynkin orientation");
    r.roots = std::make_shared<const RootSystem>(c);
    r.rep = permutation_rep(*r.roots);
    r.words = evolve_generators(dynkin, from_dynkin);
    r.order = catalogue::finite_order(r.weyl_type);
    r.dynkin = dynkin;
    r.from_dynkin = from_dynkin;
    return r;
}

/// Realization through the mutation class; throws WrongType unless finite type.
inline FiniteRealization realize_finite(const ExchangeMatrix& g, ClassCaps caps = {})
{
    const auto t = classify_mutation_type(g, caps);
    if (t.kind != MutationType::Kind::FiniteType) throw WrongType("not of finite mutation type (" + t.label() + ")");
    return realize_finite(*t.representative, t.witness.reversed());
}

/// Generators realized as reflections in the given roots of a finite type.
inline FiniteRealization realize_by_roots(const std::string& family, Index rank, const std::vector<IntVector>& roots)
{
    FiniteRealization r;
    r.roots = std::make_shared<const RootSystem>(RootSystem::of_type(family, rank));
    r.weyl_type = catalogue::recognise(r.roots->coxeter());
    r.rep = reflection_rep(*r.roots, roots);
    r.words = GeneratorWords::identity(roots.size());
    r.order = catalogue::finite_order(r.weyl_type);
    return r;
}

inline std::vector<Word> words_for(const GeneratorWords& w, const std::vector<Index>& subset)
{
    std::vector<Word> out;
    for (Index i : subset) out.push_back(w[i]);
    return out;
}

struct TorsionEntry {
    std::vector<Index> subset;
    std::string type;                 ///< catalogue label of (W_0)_I
    BigInt parabolic_order;           ///< |(W_0)_I|
    std::optional<BigInt> image_order; ///< order of the image in W; empty when a cap was hit
    bool equal = false;
};

struct TorsionCertificate {
    CanonicalKey key;
    std::vector<TorsionEntry> entries; ///< one per elliptic subset of W_0, the empty set included
    std::optional<bool> torsion_free;  ///< empty when inconclusive
    std::string note;

    bool passed() const { return torsion_free.value_or(false); }
};

inline TorsionCertificate torsion_certificate(const ExchangeMatrix& g, const FiniteRealization& r)
{
    TorsionCertificate cert;
    cert.key = matrix_key(g);
    const CoxeterMatrix w0 = coxeter_data(diagram_view(g));
    bool all = true;
    for (const auto& s : elliptic_subsets(w0)) {
        TorsionEntry e{s.vertices, s.classification.label(), *s.classification.order, std::nullopt, false};
        const auto img = subgroup_order(r.rep, words_for(r.words, s.vertices));
        e.image_order = img.order;
        e.equal = img.order && *img.order == e.parabolic_order;
        all = all && e.equal;
        cert.entries.push_back(std::move(e));
    }
    cert.torsion_free = all;
    cert.note = "finite parabolic orders compared against the permutation representation of " + r.weyl_type.label();
    return cert;
}

inline TorsionCertificate verify_torsion_free(const ExchangeMatrix& g, ClassCaps caps = {})
{
    return torsion_certificate(g, realize_finite(g, caps));
}

/// Affine-type variant; subgroup orders by bounded closure in the affine
/// representation of the affine Dynkin orientation.
inline TorsionCertificate verify_torsion_free_affine(const ExchangeMatrix& g, std::size_t closure_cap = 100000,
                                                     ClassCaps caps = {})
{
    const auto t = classify_mutation_type(g, caps);
    if (t.kind != MutationType::Kind::AffineType) throw WrongType("not of affine mutation type (" + t.label() + ")");
    const AffineRep rep = affine_rep_from_coxeter(coxeter_data(diagram_view(*t.representative)));
    const GeneratorWords words = evolve_generators(*t.representative, t.witness.reversed());
    TorsionCertificate cert;
    cert.key = matrix_key(g);
    bool all = true, capped = false;
    for (const auto& s : elliptic_subsets(coxeter_data(diagram_view(g)))) {
        TorsionEntry e{s.vertices, s.classification.label(), *s.classification.order, std::nullopt, false};
        const auto img = subgroup_order(rep, words_for(words, s.vertices), closure_cap);
        e.image_order = img.order;
        e.equal = img.order && *img.order == e.parabolic_order;
        if (!img.order) capped = true;
        all = all && e.equal;
        cert.entries.push_back(std::move(e));
    }
    if (capped) {
        cert.note = "closure cap " + std::to_string(closure_cap) + " reached; no verdict";
    } else {
        cert.torsion_free = all;
        cert.note = "finite parabolic orders compared by closure in the affine representation of " + t.type.label();
    }
    return cert;
}

/// Sum over elliptic subsets T (the empty set included) of (-1)^|T| / |W_T|.
inline Rational orbifold_euler(const CoxeterMatrix& c)
{
    Rational chi = 0;
    for (const auto& s : elliptic_subsets(c)) {
        const Rational term(BigInt(1), *s.classification.order);
        if (s.vertices.size() % 2 == 0)
            chi += term;
        else
            chi -= term;
    }
    chi.canonicalize();
    return chi;
}

struct CuspClass {
    std::vector<Index> subset;
    std::string type;
    BigInt stabilizer_order; ///< |pi((W_0)_T)|
    BigInt count;            ///< |W| / stabilizer_order
};

struct CuspCensus {
    std::vector<CuspClass> classes;
    BigInt total = 0;
};

inline CuspCensus cusp_census(const CoxeterMatrix& w0, Index dimension, const FiniteRealization& r)
{
    CuspCensus out;
    for (const auto& s : ideal_vertex_subsets(w0, dimension)) {
        const auto img = subgroup_order(r.rep, words_for(r.words, s.vertices));
        if (!img.order) throw CapExceeded("cusp census: stabilizer order not computed");
        if (r.order % *img.order != 0) throw std::logic_error("cusp census: stabilizer order does not divide |W|");
        CuspClass c{s.vertices, s.classification.label(), *img.order, r.order / *img.order};
        out.total += c.count;
        out.classes.push_back(std::move(c));
    }
    return out;
}

inline CuspCensus count_cusps(const ExchangeMatrix& g, ClassCaps caps = {})
{
    const CoxeterMatrix w0 = coxeter_data(diagram_view(g));
    const auto geo = geometric_type(w0);
    if (geo.kind != GeometricType::Kind::Hyperbolic) throw WrongType("cusps: W_0 is not hyperbolic");
    return cusp_census(w0, geo.dimension, realize_finite(g, caps));
}

/// coeff * pi^pi_power.
struct ExactVolume {
    Rational coeff;
    int pi_power = 0;

    double approx() const { return coeff.get_d() * std::pow(std::numbers::pi, pi_power); }
};

/// Volume from chi for even d: (-1)^(d/2) * vol(S^d)/2 * chi, with
/// vol(S^d) = 2^(d+1) pi^(d/2) (d/2)! / d!.
inline ExactVolume volume_from_euler(Index d, const BigInt& chi)
{
    if (d % 2 != 0) throw InvalidInput("volume: dimension must be even");
    const unsigned h = static_cast<unsigned>(d / 2);
    Rational c((BigInt(1) << static_cast<mp_bitcnt_t>(d)) * factorial(h), factorial(static_cast<unsigned>(d)));
    c.canonicalize();
    c *= chi;
    if (h % 2 == 1) c = -c;
    c.canonicalize();
    return {c, static_cast<int>(h)};
}

struct ManifoldReport {
    CanonicalKey key;
    std::string mutation_type;
    std::string weyl_type;
    CoxeterMatrix w0;
    std::string w0_components;
    GeometricType geometry;
    std::optional<BigInt> group_order;
    std::optional<BigInt> quotient_order; ///< Todd-Coxeter, custom inputs only
    Rational chi_orb;
    std::optional<BigInt> chi_X;
    std::optional<CuspCensus> cusps;
    std::optional<bool> compact;
    std::optional<ExactVolume> volume;
    std::optional<BigInt> genus;
    bool finite_covolume_certified = false;
    std::optional<TorsionCertificate> torsion;
    std::vector<std::string> notes;
};

namespace detail {

inline void fill_geometry(ManifoldReport& rep, const CoxeterMatrix& w0)
{
    rep.w0 = w0;
    rep.w0_components = classify_components(w0).label();
    rep.geometry = geometric_type(w0);
    rep.chi_orb = orbifold_euler(w0);
    if (rep.geometry.kind == GeometricType::Kind::Hyperbolic)
        rep.finite_covolume_certified = finite_volume(w0, rep.geometry.dimension);
}

inline void fill_finite(ManifoldReport& rep, const FiniteRealization& r, const ExchangeMatrix* g,
                        const CoxeterMatrix& w0)
{
    rep.weyl_type = r.weyl_type.label();
    rep.group_order = r.order;
    if (g) {
        rep.torsion = torsion_certificate(*g, r);
    } else {
        TorsionCertificate cert;
        bool all = true;
        for (const auto& s : elliptic_subsets(w0)) {
            TorsionEntry e{s.vertices, s.classification.label(), *s.classification.order, std::nullopt, false};
            const auto img = subgroup_order(r.rep, words_for(r.words, s.vertices));
            e.image_order = img.order;
            e.equal = img.order && *img.order == e.parabolic_order;
            all = all && e.equal;
            cert.entries.push_back(std::move(e));
        }
        cert.torsion_free = all;
        cert.note = "generators realized as reflections in the given roots of " + r.weyl_type.label();
        rep.torsion = std::move(cert);
    }
    if (rep.geometry.kind != GeometricType::Kind::Hyperbolic) return;
    const Index d = rep.geometry.dimension;
    rep.cusps = cusp_census(w0, d, r);
    rep.compact = rep.cusps->classes.empty();
    if (!rep.torsion->passed()) {
        rep.notes.push_back("torsion certificate failed: X is an orbifold, chi(X) not reported");
        return;
    }
    if (!rep.finite_covolume_certified) {
        rep.notes.push_back("finite covolume not certified: chi(X) and volume not reported");
        return;
    }
    if (d % 2 == 0) {
        const Rational chi = rep.chi_orb * Rational(r.order);
        if (chi.get_den() != 1) throw std::logic_error("|W| * chi_orb is not an integer");
        rep.chi_X = chi.get_num();
        rep.volume = volume_from_euler(d, *rep.chi_X);
        if (d == 2 && *rep.chi_X % 2 == 0) rep.genus = (2 - *rep.chi_X) / 2;
    } else if (rep.chi_orb != 0) {
        throw std::logic_error("nonzero orbifold Euler characteristic in odd dimension");
    }
    rep.notes.push_back("symmetries of the diagram act on X as well; not certified here");
}

} // namespace detail

/// Report for a diagram using a known realization (skips classification).
inline ManifoldReport manifold_invariants(const ExchangeMatrix& g, const FiniteRealization& r)
{
    ManifoldReport rep;
    rep.key = matrix_key(g);
    rep.mutation_type = r.weyl_type.label();
    const CoxeterMatrix w0 = coxeter_data(diagram_view(g));
    detail::fill_geometry(rep, w0);
    detail::fill_finite(rep, r, &g, w0);
    return rep;
}

inline ManifoldReport manifold_invariants(const ExchangeMatrix& g, ClassCaps caps = {},
                                          std::size_t closure_cap = 100000)
{
    const auto t = classify_mutation_type(g, caps);
    if (t.kind == MutationType::Kind::FiniteType) {
        auto rep = manifold_invariants(g, realize_finite(*t.representative, t.witness.reversed()));
        rep.mutation_type = "FiniteType(" + t.type.label() + ")";
        return rep;
    }
    ManifoldReport rep;
    rep.key = matrix_key(g);
    rep.mutation_type = t.kind == MutationType::Kind::AffineType ? "AffineType(" + t.type.label() + ")" : t.name();
    const Diagram d = diagram_view(g);
    if (d.max_weight() > 4) throw WrongType("edge labels above 4: no Coxeter data");
    detail::fill_geometry(rep, coxeter_data(d));
    if (t.kind == MutationType::Kind::AffineType) {
        rep.weyl_type = t.type.label();
        rep.torsion = verify_torsion_free_affine(g, closure_cap, caps);
    } else {
        rep.notes.push_back("no concrete representation of W for this mutation type");
    }
    return rep;
}

/// Custom input: W_0 from a diagram, W generated by reflections in given
/// roots of a finite type, W_C the normal closure of the extra relators.
struct CustomInput {
    Diagram diagram;
    std::string family;
    Index rank = 0;
    std::vector<IntVector> roots;
    std::vector<ExtraRelator> extra;
};

inline ManifoldReport manifold_invariants(const CustomInput& in, std::size_t coset_cap = 1000000)
{
    if (in.roots.size() != in.diagram.size()) throw InvalidInput("custom input: one root per vertex required");
    ManifoldReport rep;
    rep.key = canonical_form(in.diagram);
    rep.mutation_type = "Custom";
    const CoxeterMatrix w0 = coxeter_data(in.diagram);
    detail::fill_geometry(rep, w0);
    const auto r = realize_by_roots(in.family, in.rank, in.roots);
    const auto generated = group_order(r.rep);
    if (!generated.order || *generated.order != r.order)
        throw InvalidInput("custom input: the root reflections do not generate W(" + r.weyl_type.label() + ")");
    Presentation p = coxeter_presentation(w0);
    p.extra_relators = in.extra;
    const auto images = r.words.words;
    rep.quotient_order = todd_coxeter(p, coset_cap).order;
    const auto check = verify_relators(r.rep, GeneratorWords{images}, p);
    if (!check.all_pass()) rep.notes.push_back("relators failing in W: " + std::to_string(check.failures.size()));
    detail::fill_finite(rep, r, nullptr, w0);
    return rep;
}

/// Per generator: t_i = c_i s_i c_i^-1 and the halfspace sign.
struct WallTracking {
    std::vector<Word> conjugators;
    std::vector<int> signs; ///< +1 or -1
};

inline WallTracking track_walls(const ExchangeMatrix& m, const MutationSequence& seq)
{
    WallTracking w;
    w.conjugators.assign(m.rank(), Word{});
    w.signs.assign(m.rank(), 1);
    ExchangeMatrix cur = m;
    for (Index k : seq) {
        if (k >= m.rank()) throw InvalidInput("track_walls: mutation index out of range");
        const Word ck = w.conjugators[k];
        const Word tk = (ck * Word{k} * ck.inverse()).reduced();
        auto next = w.conjugators;
        for (Index i = 0; i < m.rank(); ++i)
            if (cur(i, k) > 0) next[i] = (tk * w.conjugators[i]).reduced();
        w.conjugators = std::move(next);
        w.signs[k] = -w.signs[k];
        cur = mutate(cur, k);
    }
    return w;
}

/// Wall reflections c_i s_i c_i^-1 as words.
inline GeneratorWords wall_reflections(const WallTracking& w)
{
    GeneratorWords g;
    for (Index i = 0; i < w.conjugators.size(); ++i)
        g.words.push_back((w.conjugators[i] * Word{i} * w.conjugators[i].inverse()).reduced());
    return g;
}

struct CompanionBasis {
    CoxeterType weyl_type;
    std::vector<IntVector> roots; ///< positive roots, simple-root coordinates of the Dynkin orientation
};

inline CompanionBasis companion_basis(const ExchangeMatrix& g, ClassCaps caps = {})
{
    const auto t = classify_mutation_type(g, caps);
    if (t.kind != MutationType::Kind::FiniteType) throw WrongType("companion basis: not of finite type");
    const RootSystem rs(coxeter_data(diagram_view(*t.representative)));
    const auto walls = track_walls(*t.representative, t.witness.reversed());
    CompanionBasis out{t.type, {}};
    for (Index i = 0; i < g.rank(); ++i) {
        IntVector e(g.rank(), 0);
        e[i] = 1;
        out.roots.push_back(RootSystem::positive(rs.apply(walls.conjugators[i], e)));
    }
    return out;
}

struct EuclideanQuotientReport {
    std::string w0_type;
    Index dimension = 0;
    std::vector<Word> translations;     ///< cycle-relator elements, every rotation
    bool translations_have_identity_linear_part = false;
    bool translations_commute = false;
    Index lattice_rank = 0;
    std::optional<BigInt> quotient_order;
    std::optional<BigInt> weyl_order;

    bool certified() const
    {
        return translations_have_identity_linear_part && translations_commute && lattice_rank == dimension &&
               quotient_order && weyl_order && *quotient_order == *weyl_order;
    }
};

inline EuclideanQuotientReport euclidean_quotient_report(const ExchangeMatrix& m, std::size_t coset_cap = 1000000)
{
    const Diagram g = diagram_view(m);
    const CoxeterMatrix w0 = coxeter_data(g);
    const auto geo = geometric_type(w0);
    if (geo.kind != GeometricType::Kind::Euclidean) throw WrongType("euclidean quotient: W_0 is not Euclidean");
    EuclideanQuotientReport out;
    out.w0_type = classify_components(w0).label();
    out.dimension = geo.dimension;
    const AffineRep rep = affine_rep_from_coxeter(w0);
    const Presentation p = build_presentation(g);
    for (const auto& c : p.cycle_relators)
        for (std::size_t l = 0; l < c.cycle.size(); ++l) {
            CycleRelator r = c;
            r.rotation = l;
            out.translations.push_back(cycle_word(r.rotated()).power(static_cast<unsigned>(c.exponent)));
        }
    std::vector<AffineMap> elems;
    for (const auto& w : out.translations) elems.push_back(evaluate_word(rep, w));
    out.translations_have_identity_linear_part =
        !elems.empty() && std::all_of(elems.begin(), elems.end(), [](const AffineMap& a) { return a.linear_part_is_identity(); });
    out.translations_commute = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!(elems[i] * elems[j] == elems[j] * elems[i])) out.translations_commute = false;
    std::vector<IntVector> vs;
    for (const auto& e : elems) vs.push_back(e.v);
    out.lattice_rank = lattice_rank(vs);
    out.quotient_order = todd_coxeter(p, coset_cap).order;
    const auto t = classify_mutation_type(m);
    if (t.kind == MutationType::Kind::FiniteType) out.weyl_order = catalogue::finite_order(t.type);
    return out;
}

} // namespace coxmut

#endif // COXMUT_MANIFOLD_HPP
