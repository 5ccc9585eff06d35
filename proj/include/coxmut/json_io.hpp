#ifndef COXMUT_JSON_IO_HPP
#define COXMUT_JSON_IO_HPP

// JSON surface: the diagram file format and report serialization.
// Requires nlohmann/json (vendor/json.hpp) on the include path.
//
// Diagram file: {"n": 3, "b": [[0,1,0],[-1,0,1],[0,-1,0]], "d": [1,1,1]},
// "d" optional. An optional "custom" block turns the file into a custom
// input: {"family": "A", "rank": 4, "roots": [[...], ...], "extra": "<rel lines>"}.
//
// Output conventions: vertices 1-based, objects keep insertion order,
// integers beyond 64 bits become decimal strings, rationals are
// {"num","den"}, volumes {"coeff_num","coeff_den","pi_power"}.

#include "manifold.hpp"
#include "presentation_io.hpp"
#include "tables.hpp"

#include <json.hpp>

namespace coxmut {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json big(const BigInt& v)
{
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

inline Json one_based(const std::vector<Index>& v)
{
    Json a = Json::array();
    for (Index x : v) a.push_back(x + 1);
    return a;
}

inline Json word_json(const Word& w) { return one_based(w.letters); }

inline const Json& field(const Json& j, const char* name)
{
    if (!j.contains(name)) throw InvalidInput(std::string("json: missing field \"") + name + "\"");
    return j.at(name);
}

inline std::int64_t as_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) throw InvalidInput("json: " + what + " must be an integer");
    return j.get<std::int64_t>();
}

} // namespace detail

// ---- input -------------------------------------------------------------

inline ExchangeMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object()) throw InvalidInput("json: top level must be an object");
    const auto n64 = detail::as_int(detail::field(j, "n"), "n");
    if (n64 <= 0 || n64 > 64) throw InvalidInput("rank: n must be between 1 and 64");
    const auto n = static_cast<Index>(n64);
    const Json& rows = detail::field(j, "b");
    if (!rows.is_array() || rows.size() != n) throw InvalidInput("shape: b must be an array of n rows");
    std::vector<std::int64_t> b;
    for (Index i = 0; i < n; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != n) throw InvalidInput("shape: row " + std::to_string(i + 1) + " of b must have n entries");
        for (const auto& x : row) b.push_back(detail::as_int(x, "b entry"));
    }
    std::vector<std::int64_t> d(n, 1);
    if (j.contains("d")) {
        const Json& dj = j.at("d");
        if (!dj.is_array() || dj.size() != n) throw InvalidInput("shape: d must have n entries");
        for (Index i = 0; i < n; ++i) d[i] = detail::as_int(dj[i], "d entry");
    }
    return ExchangeMatrix(n, std::move(b), std::move(d));
}

inline Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("json: ") + e.what());
    }
}

inline ExchangeMatrix matrix_from_json_text(const std::string& text) { return matrix_from_json(parse_json_text(text)); }

inline bool has_custom(const Json& j) { return j.is_object() && j.contains("custom"); }

inline CustomInput custom_from_json(const Json& j)
{
    const ExchangeMatrix m = matrix_from_json(j);
    const Json& c = detail::field(j, "custom");
    if (!c.is_object()) throw InvalidInput("json: custom must be an object");
    CustomInput in;
    in.diagram = diagram_view(m);
    const Json& fam = detail::field(c, "family");
    if (!fam.is_string()) throw InvalidInput("json: custom.family must be a string");
    in.family = fam.get<std::string>();
    const auto rank = detail::as_int(detail::field(c, "rank"), "custom.rank");
    if (rank <= 0) throw InvalidInput("json: custom.rank must be positive");
    in.rank = static_cast<Index>(rank);
    const Json& roots = detail::field(c, "roots");
    if (!roots.is_array()) throw InvalidInput("json: custom.roots must be an array");
    for (const auto& r : roots) {
        if (!r.is_array() || r.size() != in.rank) throw InvalidInput("json: each custom root needs rank entries");
        IntVector v;
        for (const auto& x : r) v.push_back(detail::as_int(x, "root entry"));
        in.roots.push_back(std::move(v));
    }
    if (c.contains("extra")) {
        if (!c.at("extra").is_string()) throw InvalidInput("json: custom.extra must be presentation text");
        in.extra = parse_extra_relators(c.at("extra").get<std::string>(), m.rank());
    }
    return in;
}

// ---- output ------------------------------------------------------------

inline Json to_json(const ExchangeMatrix& m)
{
    Json j;
    j["n"] = m.rank();
    Json b = Json::array();
    for (Index i = 0; i < m.rank(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.rank(); ++k) row.push_back(m(i, k));
        b.push_back(std::move(row));
    }
    j["b"] = std::move(b);
    Json d = Json::array();
    for (auto x : m.symmetrizer()) d.push_back(x);
    j["d"] = std::move(d);
    return j;
}

inline Json to_json(const Diagram& g)
{
    Json j;
    j["n"] = g.size();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({{"from", e.from + 1}, {"to", e.to + 1}, {"weight", e.weight}});
    j["edges"] = std::move(edges);
    return j;
}

inline Json to_json(const MutationSequence& s) { return detail::one_based(s.steps); }

inline Json to_json(const Rational& q) { return {{"num", detail::big(q.get_num())}, {"den", detail::big(q.get_den())}}; }

inline Json to_json(const ExactVolume& v)
{
    return {{"coeff_num", detail::big(v.coeff.get_num())},
            {"coeff_den", detail::big(v.coeff.get_den())},
            {"pi_power", v.pi_power}};
}

/// Orders as integers, null for infinity.
inline Json to_json(const CoxeterMatrix& c)
{
    Json rows = Json::array();
    for (Index i = 0; i < c.size(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < c.size(); ++k) row.push_back(c.infinite(i, k) ? Json(nullptr) : Json(c(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const MutationType& t, const ExchangeMatrix& input)
{
    Json j;
    j["canonical_key"] = matrix_key(input).hex();
    j["mutation_type"] = t.name();
    j["label"] = t.label();
    j["class_size"] = t.class_size;
    j["certificate"] = t.certificate;
    j["witness"] = to_json(t.witness);
    j["representative"] = t.representative ? to_json(*t.representative) : Json(nullptr);
    return j;
}

inline Json to_json(const ClassEnumeration& e)
{
    Json j;
    j["status"] = e.complete() ? "Complete" : e.status == ClassEnumeration::Status::SizeExceeded ? "SizeExceeded"
                                                                                              : "WeightExceeded";
    j["report"] = e.report();
    j["size"] = e.members.size();
    Json members = Json::array();
    for (const auto& m : e.members)
        members.push_back({{"canonical_key", m.key.hex()}, {"witness", to_json(m.witness)}, {"matrix", to_json(m.matrix)}});
    j["members"] = std::move(members);
    return j;
}

inline Json to_json(const TorsionCertificate& c)
{
    Json j;
    j["canonical_key"] = c.key.hex();
    j["torsion_free"] = c.torsion_free ? Json(*c.torsion_free) : Json(nullptr);
    j["note"] = c.note;
    Json entries = Json::array();
    for (const auto& e : c.entries)
        entries.push_back({{"subset", detail::one_based(e.subset)},
                           {"type", e.type},
                           {"parabolic_order", detail::big(e.parabolic_order)},
                           {"image_order", e.image_order ? detail::big(*e.image_order) : Json(nullptr)},
                           {"equal", e.equal}});
    j["entries"] = std::move(entries);
    return j;
}

inline Json to_json(const CuspCensus& c)
{
    Json classes = Json::array();
    for (const auto& k : c.classes)
        classes.push_back({{"subset", detail::one_based(k.subset)},
                           {"type", k.type},
                           {"stabilizer_order", detail::big(k.stabilizer_order)},
                           {"count", detail::big(k.count)}});
    return classes;
}

inline Json to_json(const ManifoldReport& r)
{
    Json j;
    j["canonical_key"] = r.key.hex();
    j["mutation_type"] = r.mutation_type;
    j["weyl_type"] = r.weyl_type.empty() ? Json(nullptr) : Json(r.weyl_type);
    j["coxeter_matrix"] = to_json(r.w0);
    j["w0_components"] = r.w0_components;
    j["geometric_type"] = r.geometry.name();
    j["dimension"] = r.geometry.dimension;
    j["signature"] = {{"positive", r.geometry.signature.positive},
                      {"zero", r.geometry.signature.zero},
                      {"negative", r.geometry.signature.negative}};
    j["group_order"] = r.group_order ? detail::big(*r.group_order) : Json(nullptr);
    if (r.quotient_order) j["quotient_order"] = detail::big(*r.quotient_order);
    j["chi_orb"] = to_json(r.chi_orb);
    j["chi_X"] = r.chi_X ? detail::big(*r.chi_X) : Json(nullptr);
    j["cusps"] = r.cusps ? detail::big(r.cusps->total) : Json(nullptr);
    j["cusp_census"] = r.cusps ? to_json(*r.cusps) : Json(nullptr);
    j["compact"] = r.compact ? Json(*r.compact) : Json(nullptr);
    j["volume"] = r.volume ? to_json(*r.volume) : Json(nullptr);
    j["genus"] = r.genus ? detail::big(*r.genus) : Json(nullptr);
    j["finite_covolume_certified"] = r.finite_covolume_certified;
    j["torsion"] = r.torsion ? to_json(*r.torsion) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline Json to_json(const EuclideanQuotientReport& r)
{
    Json t = Json::array();
    for (const auto& w : r.translations) t.push_back(detail::word_json(w));
    return {{"w0_type", r.w0_type},
            {"dimension", r.dimension},
            {"translations", std::move(t)},
            {"translations_have_identity_linear_part", r.translations_have_identity_linear_part},
            {"translations_commute", r.translations_commute},
            {"lattice_rank", r.lattice_rank},
            {"quotient_order", r.quotient_order ? detail::big(*r.quotient_order) : Json(nullptr)},
            {"weyl_order", r.weyl_order ? detail::big(*r.weyl_order) : Json(nullptr)},
            {"certified", r.certified()}};
}

inline Json to_json(const RowResult& r)
{
    Json j;
    j["table"] = r.row.table;
    j["row"] = r.row.name();
    j["passed"] = r.passed();
    j["class_size"] = r.class_size;
    j["candidates"] = r.candidates;
    j["member"] = r.member ? to_json(*r.member) : Json(nullptr);
    j["witness"] = to_json(r.witness);
    j["report"] = r.report ? to_json(*r.report) : Json(nullptr);
    j["mismatches"] = r.mismatches;
    return j;
}

} // namespace coxmut

#endif // COXMUT_JSON_IO_HPP
