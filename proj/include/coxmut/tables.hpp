#ifndef COXMUT_TABLES_HPP
#define COXMUT_TABLES_HPP

// Reference rows for finite-type manifolds and a runner that searches a
// mutation class for a member realizing each row.

#include "manifold.hpp"

#include <chrono>
#include <sstream>

namespace coxmut {

struct TableRow {
    int table = 1;
    std::string family;
    Index rank = 0;
    Index dimension = 0;
    BigInt group_order;
    BigInt cusps;
    std::optional<long> chi_X;
    std::optional<ExactVolume> volume;
    std::optional<long> genus;
    std::optional<double> per_chamber; ///< reference volume of one chamber, used for crosschecks only

    std::string name() const { return family + std::to_string(rank); }
    bool compact() const { return cusps == 0; }
};

namespace tables {

inline BigInt pow2(unsigned k) { return BigInt(1) << static_cast<mp_bitcnt_t>(k); }

inline std::vector<TableRow> table1()
{
    const auto f = [](unsigned k) { return factorial(k); };
    std::vector<TableRow> rows;
    rows.push_back({1, "A", 4, 3, f(5), 5, {}, {}, {}, {}});
    rows.push_back({1, "D", 4, 3, pow2(3) * f(4), 16, {}, {}, {}, 0.422892});
    rows.push_back({1, "D", 5, 4, pow2(4) * f(5), 10, 2, ExactVolume{Rational(8, 3), 2}, {}, 0.013707});
    rows.push_back({1, "E", 6, 5, pow2(7) * 81 * 5, 27, {}, {}, {}, {}});
    rows.push_back({1, "E", 7, 6, pow2(10) * 81 * 5 * 7, 126, -52, ExactVolume{Rational(416, 15), 3}, {}, 2.962092e-4});
    rows.push_back({1, "E", 8, 7, pow2(14) * 243 * 25 * 7, 2160, {}, {}, {}, {}});
    rows.push_back({1, "A", 7, 5, f(8), 70, {}, {}, {}, {}});
    rows.push_back({1, "D", 8, 6, pow2(7) * f(8), 1120, -832, ExactVolume{Rational(8 * 832, 15), 3}, {}, 0.002665});
    return rows;
}

inline std::vector<TableRow> table2()
{
    std::vector<TableRow> rows;
    rows.push_back({2, "B", 3, 2, 48, 0, -4, ExactVolume{Rational(8), 1}, 3, {}});
    rows.push_back({2, "B", 4, 3, pow2(4) * factorial(4), 16, {}, {}, {}, 0.211446});
    rows.push_back({2, "F", 4, 3, pow2(7) * 9, 0, {}, {}, {}, {}});
    return rows;
}

inline std::vector<TableRow> table(int which)
{
    if (which == 1) return table1();
    if (which == 2) return table2();
    throw InvalidInput("tables: table must be 1 or 2");
}

} // namespace tables

struct RowResult {
    TableRow row;
    std::size_t class_size = 0;
    std::size_t candidates = 0; ///< hyperbolic members of the row dimension with finite covolume
    std::size_t examined = 0;
    std::optional<ExchangeMatrix> member;
    MutationSequence witness; ///< Dynkin orientation -> member
    std::optional<ManifoldReport> report;
    std::vector<std::string> mismatches; ///< reasons the last examined candidate was rejected
    double seconds = 0;

    bool passed() const { return report.has_value(); }
};

/// Differences between a report and a row; empty when the report realizes it.
inline std::vector<std::string> row_mismatches(const TableRow& row, const ManifoldReport& rep)
{
    std::vector<std::string> out;
    auto want = [&](bool ok, const std::string& what) {
        if (!ok) out.push_back(what);
    };
    want(rep.geometry.kind == GeometricType::Kind::Hyperbolic && rep.geometry.dimension == row.dimension,
         "dimension");
    want(rep.group_order && *rep.group_order == row.group_order, "|W|");
    want(rep.torsion && rep.torsion->passed(), "torsion certificate");
    want(rep.finite_covolume_certified, "finite covolume");
    want(rep.cusps && rep.cusps->total == row.cusps, "cusps");
    want(rep.compact && *rep.compact == row.compact(), "compactness");
    if (row.dimension % 2 == 1) want(rep.chi_orb == 0, "chi_orb = 0 in odd dimension");
    if (row.chi_X) want(rep.chi_X && *rep.chi_X == *row.chi_X, "chi(X)");
    if (row.volume)
        want(rep.volume && rep.volume->coeff == row.volume->coeff && rep.volume->pi_power == row.volume->pi_power,
             "volume");
    if (row.genus) want(rep.genus && *rep.genus == *row.genus, "genus");
    return out;
}

/// Searches the mutation class of a Dynkin orientation of the row's type for
/// a member realizing the row, stopping at the first match.
inline RowResult run_row(const TableRow& row, ClassCaps caps = {})
{
    const auto start = std::chrono::steady_clock::now();
    RowResult res;
    res.row = row;
    const ExchangeMatrix dynkin = dynkin_orientation(row.family, row.rank);
    const auto cls = mutation_class(dynkin, caps);
    res.class_size = cls.members.size();
    if (!cls.complete()) throw CapExceeded("tables: " + cls.report());
    std::optional<FiniteRealization> base;
    for (const auto& m : cls.members) {
        const CoxeterMatrix w0 = coxeter_data(diagram_view(m.matrix));
        const auto geo = geometric_type(w0);
        if (geo.kind != GeometricType::Kind::Hyperbolic || geo.dimension != row.dimension) continue;
        if (!finite_volume(w0, row.dimension)) continue;
        ++res.candidates;
        if (res.report) continue;
        ++res.examined;
        if (!base) base = realize_finite(dynkin, MutationSequence{});
        FiniteRealization r = *base;
        r.words = evolve_generators(dynkin, m.witness);
        r.from_dynkin = m.witness;
        auto rep = manifold_invariants(m.matrix, r);
        res.mismatches = row_mismatches(row, rep);
        if (res.mismatches.empty()) {
            res.member = m.matrix;
            res.witness = m.witness;
            res.report = std::move(rep);
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

/// One-line summary of a row result.
inline std::string summary(const RowResult& r)
{
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " table " << r.row.table << " " << r.row.name() << ": d=" << r.row.dimension
       << " |W|=" << r.row.group_order.get_str() << " cusps=" << r.row.cusps.get_str();
    if (r.row.chi_X) os << " chi(X)=" << *r.row.chi_X;
    os << " (class " << r.class_size << ", candidates " << r.candidates << ", examined " << r.examined << ", "
       << std::fixed;
    os.precision(2);
    os << r.seconds << "s)";
    if (!r.passed()) {
        os << " mismatch:";
        for (const auto& m : r.mismatches) os << " " << m;
        if (r.candidates == 0) os << " no candidate";
    }
    return os.str();
}

struct VolumeCheck {
    std::string name;
    double computed = 0;  ///< exact volume, evaluated
    double reference = 0; ///< |W| times the per-chamber constant
    double tolerance = 0;

    double relative_error() const { return std::abs(computed - reference) / std::abs(computed); }
    bool passed() const { return relative_error() < tolerance; }
};

/// Exact volumes against |W| times the per-chamber constants (even d).
inline std::vector<VolumeCheck> volume_crosschecks(double tolerance = 1e-3)
{
    std::vector<VolumeCheck> out;
    for (const auto& row : tables::table1()) {
        if (!row.volume || !row.per_chamber) continue;
        out.push_back({row.name(), row.volume->approx(), row.group_order.get_d() * *row.per_chamber, tolerance});
    }
    return out;
}

/// Two rows whose quotients are the same manifold: equal |W| * per-chamber volume.
inline VolumeCheck same_manifold_check(const TableRow& a, const TableRow& b, double tolerance = 1e-4)
{
    if (!a.per_chamber || !b.per_chamber) throw InvalidInput("tables: row without per-chamber constant");
    return {a.name() + "/" + b.name(), a.group_order.get_d() * *a.per_chamber, b.group_order.get_d() * *b.per_chamber,
            tolerance};
}

} // namespace coxmut

#endif // COXMUT_TABLES_HPP
