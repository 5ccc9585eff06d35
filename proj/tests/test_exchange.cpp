#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace coxmut;
using namespace coxmut::testing;

TEST(Mutate, PathToOrientedTriangle)
{
    EXPECT_EQ(mutate(path3(), 1), ExchangeMatrix::quiver({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST(Mutate, SkewSymmetrizableB3)
{
    const auto m = mutate(b3(), 1);
    EXPECT_EQ(m, ExchangeMatrix::from_rows({{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}}, {1, 1, 2}));
    EXPECT_EQ(std::vector<std::int64_t>(m.symmetrizer().begin(), m.symmetrizer().end()),
              (std::vector<std::int64_t>{1, 1, 2}));
}

TEST(Mutate, RejectsOutOfRange) { EXPECT_THROW(mutate(path3(), 3), InvalidInput); }

TEST(Mutate, InvolutiveAndPreservesSymmetrizerOnRandomMatrices)
{
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const Index n = 2 + trial % 6;
        const auto m = random_matrix(rng, n);
        for (Index k = 0; k < n; ++k) {
            const auto once = mutate(m, k);
            EXPECT_TRUE(std::equal(once.symmetrizer().begin(), once.symmetrizer().end(), m.symmetrizer().begin()));
            EXPECT_EQ(mutate(once, k), m);
        }
    }
}

TEST(ExchangeMatrix, ValidationNamesTheInvariant)
{
    try {
        ExchangeMatrix::quiver({{0, 1}, {1, 0}});
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("skew-symmetrizability"), std::string::npos);
    }
    try {
        ExchangeMatrix::quiver({{1, 0}, {0, 0}});
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("diagonal"), std::string::npos);
    }
    try {
        ExchangeMatrix::from_rows({{0, 1}, {0, 0}}, {1, 1});
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("sign pattern"), std::string::npos);
    }
    EXPECT_THROW(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}, {1, 0}), InvalidInput);
}

TEST(DiagramView, Labels)
{
    const auto g = diagram_view(ExchangeMatrix::quiver({{0, 1}, {-1, 0}}));
    ASSERT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.edges()[0], (Diagram::Edge{0, 1, 1}));

    const auto b = diagram_view(b3());
    EXPECT_EQ(b.edges(), (std::vector<Diagram::Edge>{{0, 1, 1}, {1, 2, 2}}));

    const auto t = diagram_view(mutate(b3(), 1));
    EXPECT_EQ(t.weight(0, 1), 1);
    EXPECT_EQ(t.weight(1, 2), 2);
    EXPECT_EQ(t.weight(0, 2), 2);
    EXPECT_TRUE(is_perfect_square(t.weight(0, 1) * t.weight(1, 2) * t.weight(0, 2)));
    EXPECT_TRUE(satisfies_square_cycle_invariant(t));
}

// Labels a, b on i-k, k-j and c, d on i-j before and after mutating at k
// satisfy +-sqrt(c) +- sqrt(d) = sqrt(ab), i.e. (ab - c - d)^2 = 4cd, when
// i -> k -> j is an oriented path; otherwise c = d.
TEST(DiagramView, TriangleRuleOnRandomMatrices)
{
    std::mt19937 rng(7);
    int triangles = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Index n = 3 + trial % 4;
        const auto m = random_matrix(rng, n, 2);
        const Index k = trial % n;
        const auto before = diagram_view(m);
        const auto after = diagram_view(mutate(m, k));
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                if (i == j || i == k || j == k) continue;
                const std::int64_t c = before.weight(i, j), d = after.weight(i, j);
                if (before.has_arrow(i, k) && before.has_arrow(k, j)) {
                    const std::int64_t ab = before.weight(i, k) * before.weight(k, j);
                    EXPECT_EQ((ab - c - d) * (ab - c - d), 4 * c * d);
                    ++triangles;
                } else if (!(before.has_arrow(j, k) && before.has_arrow(k, i))) {
                    EXPECT_EQ(c, d);
                }
            }
    }
    EXPECT_GT(triangles, 100);
}

TEST(CanonicalForm, RelabelingInvariant)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = 2 + trial % 7;
        const auto m = random_matrix(rng, n, 2);
        std::vector<Index> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        EXPECT_EQ(canonical_form(diagram_view(m)), canonical_form(diagram_view(relabel(m, p))));
        EXPECT_EQ(matrix_key(m), matrix_key(relabel(m, p)));
    }
}

TEST(CanonicalForm, DistinguishesNonIsomorphic)
{
    EXPECT_NE(canonical_form(diagram_view(path3())), canonical_form(diagram_view(cycle3())));
    const auto sink = ExchangeMatrix::quiver({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
    const auto source = ExchangeMatrix::quiver({{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
    EXPECT_NE(canonical_form(diagram_view(sink)), canonical_form(diagram_view(source)));
}

// Exhaustive check against all relabelings for small random quivers.
TEST(CanonicalForm, AgreesWithBruteForceIsomorphism)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = 4;
        const auto a = random_matrix(rng, n, 1, true);
        const auto b = random_matrix(rng, n, 1, true);
        std::vector<Index> p(n);
        std::iota(p.begin(), p.end(), 0);
        bool iso = false;
        do {
            iso = iso || relabel(a, p) == b;
        } while (std::next_permutation(p.begin(), p.end()));
        EXPECT_EQ(iso, canonical_form(diagram_view(a)) == canonical_form(diagram_view(b)));
    }
}

TEST(MutationClass, Sizes)
{
    EXPECT_EQ(mutation_class(ExchangeMatrix::quiver({{0, 1}, {-1, 0}})).members.size(), 1u);
    const auto a3 = mutation_class(path3());
    EXPECT_TRUE(a3.complete());
    EXPECT_EQ(a3.members.size(), 4u);
    const auto k = mutation_class(k4());
    EXPECT_EQ(k.status, ClassEnumeration::Status::WeightExceeded);
    ASSERT_TRUE(k.heavy_member);
    EXPECT_GT(diagram_view(k.members[*k.heavy_member].matrix).max_weight(), 4);
}

TEST(MutationClass, WitnessesReproduceMembers)
{
    const auto d = dynkin_orientation("D", 5);
    for (const auto& m : mutation_class(d).members) {
        EXPECT_EQ(mutate(d, m.witness), m.matrix);
        EXPECT_EQ(matrix_key(m.matrix), m.key);
    }
}

TEST(MutationClass, SizeCapIsReported)
{
    const auto e = mutation_class(dynkin_orientation("E", 6), {10, 4});
    EXPECT_EQ(e.status, ClassEnumeration::Status::SizeExceeded);
    EXPECT_FALSE(e.complete());
}

TEST(Classify, Examples)
{
    const auto t3 = classify_mutation_type(cycle3());
    EXPECT_EQ(t3.kind, MutationType::Kind::FiniteType);
    EXPECT_EQ(t3.label(), "A3");
    ASSERT_TRUE(t3.representative);
    EXPECT_EQ(mutate(cycle3(), t3.witness), *t3.representative);
    EXPECT_TRUE(diagram_view(*t3.representative).acyclic());

    const auto t4 = classify_mutation_type(oriented_cycle(4));
    EXPECT_EQ(t4.kind, MutationType::Kind::FiniteType);
    EXPECT_EQ(t4.label(), "D4");

    EXPECT_EQ(classify_mutation_type(k4()).kind, MutationType::Kind::MutationInfinite);
}

TEST(Classify, AffineAndOther)
{
    // Acyclic 4-cycle (not oriented) is affine A~3.
    const auto a = quiver_from_arrows(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    const auto t = classify_mutation_type(a);
    EXPECT_EQ(t.kind, MutationType::Kind::AffineType);
    EXPECT_EQ(t.label(), "A~3");
    // Kronecker quiver: rank 2, label 4, affine A~1.
    EXPECT_EQ(classify_mutation_type(ExchangeMatrix::quiver({{0, 2}, {-2, 0}})).label(), "A~1");
    // Rank 2 with label above 4 is mutation-finite but neither finite nor affine.
    EXPECT_EQ(classify_mutation_type(ExchangeMatrix::quiver({{0, 3}, {-3, 0}})).kind,
              MutationType::Kind::OtherMutationFinite);
    EXPECT_THROW(classify_mutation_type(ExchangeMatrix::quiver({{0, 0}, {0, 0}})), InvalidInput);
}

TEST(Classify, WholeClassSharesTheLabel)
{
    for (auto [f, r] : std::vector<std::pair<std::string, Index>>{{"A", 4}, {"B", 3}, {"D", 4}, {"C", 3}, {"G", 2}}) {
        const auto d = dynkin_orientation(f, r);
        const std::string want = classify_mutation_type(d).label();
        for (const auto& m : mutation_class(d).members) EXPECT_EQ(classify_mutation_type(m.matrix).label(), want);
    }
}
