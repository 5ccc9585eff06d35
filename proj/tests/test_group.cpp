#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace coxmut;
using namespace coxmut::testing;

namespace {

BigInt order_of(const GroupOrderResult& r)
{
    EXPECT_TRUE(r.exact());
    return r.order.value_or(BigInt(-1));
}

// Random permutations for cross-checking stabilizer chains by closure.
Perm random_perm(std::mt19937& rng, std::size_t n)
{
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

std::size_t closure_size(std::size_t n, const std::vector<Perm>& gens)
{
    std::set<std::vector<Point>> seen;
    std::vector<Perm> queue{Perm(n)};
    auto images = [n](const Perm& p) {
        std::vector<Point> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = p(static_cast<Point>(i));
        return v;
    };
    seen.insert(images(queue[0]));
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            Perm h = g * queue[q];
            if (seen.insert(images(h)).second) queue.push_back(std::move(h));
        }
    return seen.size();
}

} // namespace

TEST(RootSystem, Counts)
{
    EXPECT_EQ(RootSystem::of_type("A", 3).size(), 12u);
    EXPECT_EQ(RootSystem::of_type("E", 8).size(), 240u);
    EXPECT_EQ(RootSystem::of_type("G", 2).size(), 12u);
    EXPECT_EQ(RootSystem::of_type("B", 4).size(), 32u);
    EXPECT_EQ(RootSystem::of_type("F", 4).size(), 48u);
    EXPECT_EQ(RootSystem::of_type("D", 5).size(), 40u);
    EXPECT_EQ(RootSystem::of_type("E", 7).size(), 126u);
    EXPECT_THROW(RootSystem::of_type("H", 3), InvalidInput);
    EXPECT_THROW(RootSystem(catalogue::affine("A", 2)), InvalidInput);
}

TEST(PermutationRep, Examples)
{
    const auto a1 = permutation_rep(RootSystem::of_type("A", 1));
    EXPECT_EQ(a1.degree, 2u);
    EXPECT_EQ(a1.generators[0](0), 1u);

    const auto rs = RootSystem::of_type("A", 3);
    const auto rep = permutation_rep(rs);
    for (Index i = 0; i < 3; ++i)
        for (std::size_t r = 0; r < rs.size(); ++r) {
            IntVector e(3, 0);
            e[i] = 1;
            const bool orthogonal = rs.cartan().pairing(rs.roots()[r], e) == 0;
            EXPECT_EQ(rep.generators[i](static_cast<Point>(r)) == r, orthogonal);
        }

    const auto b3 = permutation_rep(RootSystem::of_type("B", 3));
    EXPECT_TRUE(evaluate_word(b3, Word{1, 2}.power(4)).is_identity());
    EXPECT_FALSE(evaluate_word(b3, Word{1, 2}.power(2)).is_identity());
}

TEST(PermutationRep, CoxeterRelationsExactly)
{
    for (const auto& [f, r] : std::vector<std::pair<std::string, Index>>{{"A", 5}, {"B", 4}, {"D", 5}, {"E", 6}, {"F", 4}, {"G", 2}}) {
        const auto rs = RootSystem::of_type(f, r);
        const auto rep = permutation_rep(rs);
        const auto& c = rs.coxeter();
        for (Index i = 0; i < r; ++i) {
            EXPECT_EQ(rep.generators[i].order(), 2);
            for (Index j = i + 1; j < r; ++j) EXPECT_EQ((rep.generators[i] * rep.generators[j]).order(), c(i, j));
        }
    }
}

TEST(GroupOrder, Examples)
{
    EXPECT_EQ(order_of(group_order(5, {Perm(5)})), 1);
    EXPECT_EQ(order_of(group_order(permutation_rep(RootSystem::of_type("A", 4)))), 120);
    EXPECT_EQ(order_of(group_order(permutation_rep(RootSystem::of_type("E", 7)))), 2903040);
    EXPECT_EQ(order_of(group_order(permutation_rep(RootSystem::of_type("E", 8)))), BigInt("696729600"));
    EXPECT_EQ(order_of(group_order(permutation_rep(RootSystem::of_type("F", 4)))), 1152);
    EXPECT_EQ(order_of(group_order(permutation_rep(RootSystem::of_type("B", 6)))), 46080);
}

TEST(GroupOrder, AgreesWithClosureOnRandomGroups)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + trial % 4;
        std::vector<Perm> gens;
        for (int g = 0; g < 1 + trial % 3; ++g) gens.push_back(random_perm(rng, n));
        EXPECT_EQ(order_of(group_order(n, gens)), closure_size(n, gens));
        StabilizerChain chain(n, gens);
        for (const auto& g : gens) EXPECT_TRUE(chain.contains(g));
    }
}

TEST(EvaluateWord, Homomorphism)
{
    const auto rep = permutation_rep(RootSystem::of_type("D", 5));
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto u = random_sequence(rng, 5, 10), v = random_sequence(rng, 5, 10);
        const Word wu(u.steps), wv(v.steps);
        EXPECT_EQ(evaluate_word(rep, wu * wv), evaluate_word(rep, wu) * evaluate_word(rep, wv));
    }
    EXPECT_TRUE(evaluate_word(rep, Word{}).is_identity());
    EXPECT_THROW(evaluate_word(rep, Word{7}), InvalidInput);
}

TEST(SubgroupOrder, Examples)
{
    const auto d = dynkin_orientation("A", 4);
    const auto rep = permutation_rep(RootSystem(coxeter_data(diagram_view(d))));
    const auto words = evolve_generators(d, {2});
    EXPECT_EQ(order_of(subgroup_order(rep, {words[0], words[1], words[2]})), 24);
    EXPECT_EQ(order_of(subgroup_order(rep, words.words)), 120);
}

TEST(VerifyRelators, Examples)
{
    const auto rep = permutation_rep(RootSystem::of_type("A", 3));
    const auto w = evolve_generators(path3(), {1});
    const auto p = build_presentation(diagram_view(mutate(path3(), 1)));
    ASSERT_EQ(p.cycle_relators.size(), 1u);
    const auto ok = verify_relators(rep, w, p);
    EXPECT_TRUE(ok.all_pass());
    EXPECT_EQ(ok.checked, 3u + 3u + 1u);

    EXPECT_TRUE(verify_relators(rep, GeneratorWords::identity(3), build_presentation(diagram_view(path3()))).all_pass());

    const auto a2 = permutation_rep(RootSystem::of_type("A", 2));
    Presentation wrong;
    wrong.n_generators = 2;
    wrong.power_relators.push_back({0, 1, 2});
    const auto bad = verify_relators(a2, GeneratorWords::identity(2), wrong);
    EXPECT_FALSE(bad.all_pass());
    EXPECT_EQ(bad.failures.size(), 1u);
}

TEST(ToddCoxeter, Examples)
{
    const auto c3 = build_presentation(diagram_view(cycle3()));
    EXPECT_EQ(order_of(todd_coxeter(c3)), 24);
    const auto c4 = build_presentation(diagram_view(oriented_cycle(4)));
    EXPECT_EQ(order_of(todd_coxeter(c4)), 192);
    EXPECT_FALSE(todd_coxeter(c3.coxeter_part(), 20000).exact());
    EXPECT_FALSE(todd_coxeter(c4.coxeter_part(), 20000).exact());
}

TEST(ToddCoxeter, FiniteCoxeterGroups)
{
    for (const auto& [f, r] : std::vector<std::pair<std::string, Index>>{{"A", 5}, {"B", 4}, {"D", 5}, {"F", 4}, {"G", 2}, {"H", 3}, {"E", 6}}) {
        const auto c = catalogue::finite(f, r);
        EXPECT_EQ(order_of(todd_coxeter(coxeter_presentation(c))), catalogue::finite_order(catalogue::recognise(c)))
            << f << r;
    }
}

TEST(AffineRep, TranslationsOfA2)
{
    const auto rep = affine_rep("A", 2);
    ASSERT_EQ(rep.size(), 3u);
    for (const auto& g : rep.generators) EXPECT_TRUE((g * g).is_identity());
    const auto p = build_presentation(diagram_view(cycle3()));
    std::vector<AffineMap> ts;
    for (Index l = 0; l < 3; ++l) {
        CycleRelator r = p.cycle_relators[0];
        r.rotation = l;
        const auto t = evaluate_word(rep, cycle_word(r.rotated()).power(2));
        EXPECT_TRUE(t.linear_part_is_identity());
        EXPECT_FALSE(t.is_identity());
        ts.push_back(t);
    }
    for (const auto& a : ts)
        for (const auto& b : ts) EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(lattice_rank({ts[0].v, ts[1].v, ts[2].v}), 2u);
}

TEST(AffineRep, ClosureOrders)
{
    const auto rep = affine_rep("A", 2);
    EXPECT_EQ(order_of(subgroup_order(rep, {Word{0}, Word{1}})), 6);
    EXPECT_EQ(order_of(subgroup_order(rep, {Word{0}})), 2);
    EXPECT_FALSE(bounded_closure_order(rep.generators, 1000).exact());
    EXPECT_FALSE(bounded_closure_order(rep.generators, 1).exact());

    for (const auto& [f, n] : std::vector<std::pair<std::string, Index>>{{"A", 3}, {"B", 3}, {"C", 3}, {"D", 4}, {"G", 2}, {"F", 4}, {"E", 6}}) {
        const auto r = affine_rep(f, n);
        // Every maximal proper parabolic is finite with its catalogue order.
        for (Index drop = 0; drop < r.size(); ++drop) {
            std::vector<Index> keep;
            std::vector<Word> words;
            for (Index i = 0; i < r.size(); ++i)
                if (i != drop) keep.push_back(i), words.push_back(Word{i});
            const auto want = classify_components(r.coxeter.submatrix(keep)).order;
            ASSERT_TRUE(want);
            if (*want > 60000) continue;
            EXPECT_EQ(order_of(subgroup_order(r, words, 100000)), *want) << f << n << " drop " << drop;
        }
    }
}

TEST(AffineRep, TranslationsCommuteWithTranslations)
{
    const auto rep = affine_rep("B", 3);
    std::mt19937 rng(4);
    std::vector<AffineMap> translations;
    for (int t = 0; t < 400 && translations.size() < 8; ++t) {
        // A power of any element has trivial linear part.
        const auto g = evaluate_word(rep, Word(random_sequence(rng, 4, 12).steps));
        auto w = g;
        for (int k = 0; k < 48 && !w.linear_part_is_identity(); ++k) w = w * g;
        if (w.linear_part_is_identity() && !w.is_identity()) translations.push_back(w);
    }
    ASSERT_GE(translations.size(), 2u);
    for (const auto& a : translations)
        for (const auto& b : translations) EXPECT_EQ(a * b, b * a);
}
