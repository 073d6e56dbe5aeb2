#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pernull/corpus.hpp"
#include "pernull/error.hpp"
#include "pernull/matching.hpp"

namespace pernull {
namespace {

std::size_t count_labeled(std::size_t n) {
    std::size_t c = 0;
    enumerate_labeled_graphs(n, [&](const Graph&) { ++c; });
    return c;
}

TEST(Rng, MatchesReferenceMersenneTwister) {
    // First output of MT19937-64 seeded with 5489.
    Rng rng(5489);
    EXPECT_EQ(rng.next(), 14514284786278117030ULL);
}

TEST(Rng, BelowStaysInRange) {
    Rng rng(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto x = rng.below(7);
        ASSERT_LT(x, 7u);
        seen.insert(x);
    }
    EXPECT_EQ(seen.size(), 7u);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(LabeledEnumeration, ClosedFormCounts) {
    EXPECT_EQ(count_labeled(0), 1u);
    EXPECT_EQ(count_labeled(1), 1u);
    EXPECT_EQ(count_labeled(2), 2u);
    EXPECT_EQ(count_labeled(3), 8u);
    EXPECT_EQ(count_labeled(4), 64u);
    EXPECT_EQ(count_labeled(5), 1024u);
}

TEST(LabeledEnumeration, AscendingAndDistinct) {
    std::vector<Graph> graphs;
    enumerate_labeled_graphs(3, [&](const Graph& g) { graphs.push_back(g); });
    EXPECT_EQ(graphs.front(), Graph(3));
    EXPECT_EQ(graphs.back(), complete_graph(3));
    std::set<std::string> codes;
    for (const auto& g : graphs) codes.insert(to_graph6(g));
    EXPECT_EQ(codes.size(), 8u);
}

TEST(LabeledEnumeration, Guard) { EXPECT_THROW(enumerate_labeled_graphs(8, [](const Graph&) {}), ScaleError); }

TEST(UnlabeledEnumeration, ConnectedClassCounts) {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t c = 0;
        enumerate_connected_unlabeled(n, [&](const Graph& g) {
            ASSERT_TRUE(is_connected(g));
            ++c;
        });
        EXPECT_EQ(c, expected[n]) << n;
    }
    EXPECT_THROW(enumerate_connected_unlabeled(10, [](const Graph&) {}), ScaleError);
}

TEST(UnlabeledEnumeration, MatchesLabeledClassesAtSix) {
    std::set<std::string> from_labeled;
    enumerate_labeled_graphs(6, [&](const Graph& g) {
        if (is_connected(g)) from_labeled.insert(to_graph6(canonical_form(g)));
    });
    std::set<std::string> from_unlabeled;
    enumerate_connected_unlabeled(6, [&](const Graph& g) { from_unlabeled.insert(to_graph6(canonical_form(g))); });
    EXPECT_EQ(from_labeled, from_unlabeled);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 1 + rng.below(11);
        const auto g = random_gnp(n, 0.4, rng);
        std::vector<int> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        ASSERT_EQ(canonical_form(g), canonical_form(testing::relabel(g, perm))) << to_graph6(g);
    }
    // Regular graphs stress the individualization step.
    EXPECT_EQ(canonical_form(petersen_graph()), canonical_form(testing::relabel(petersen_graph(), {3, 7, 1, 9, 0, 2, 8, 4, 6, 5})));
    EXPECT_NE(canonical_form(cycle_graph(6)), canonical_form(Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(RandomFamilies, Postconditions) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 3 + rng.below(15);
        const auto tree = random_tree(n, rng);
        ASSERT_TRUE(is_connected(tree));
        ASSERT_EQ(tree.size(), n - 1);
        ASSERT_TRUE(is_unicyclic(random_unicyclic(n, rng)));
        ASSERT_TRUE(is_connected(random_tree_plus(n, 0.3, rng)));
    }
    EXPECT_EQ(random_unicyclic(3, 1), complete_graph(3));
    EXPECT_EQ(random_unicyclic(12, 99), random_unicyclic(12, 99));
}

TEST(CorpusSpec, KindNames) {
    EXPECT_EQ(to_string(CorpusKind::RandomUnicyclic), "RANDOM_UNICYCLIC");
    EXPECT_EQ(corpus_kind_from_string("LINE_GRAPHS_OF"), CorpusKind::LineGraphsOf);
    EXPECT_THROW(corpus_kind_from_string("nope"), ArgumentError);
}

std::vector<std::string> stream(const CorpusSpec& spec) {
    std::vector<std::string> out;
    for_each_graph(spec, [&](const Graph& g) { out.push_back(to_graph6(g)); });
    return out;
}

TEST(CorpusSpec, RandomStreamsAreReproducible) {
    CorpusSpec spec;
    spec.kind = CorpusKind::RandomGnp;
    spec.n_min = 4;
    spec.n_max = 12;
    spec.count = 50;
    spec.seed = 2024;
    const auto first = stream(spec);
    EXPECT_EQ(first.size(), 50u);
    EXPECT_EQ(first, stream(spec));
    spec.seed = 2025;
    EXPECT_NE(first, stream(spec));
}

TEST(CorpusSpec, Transforms) {
    CorpusSpec spec;
    spec.kind = CorpusKind::FactorCriticalFilter;
    spec.base = CorpusKind::AllConnectedLabeled;
    spec.n_min = 3;
    spec.n_max = 3;
    EXPECT_EQ(stream(spec), std::vector<std::string>{"Bw"});
    spec.kind = CorpusKind::LineGraphsOf;
    EXPECT_EQ(stream(spec).size(), 4u);
    spec.kind = CorpusKind::AllLabeled;
    spec.n_min = 5;
    spec.n_max = 4;
    EXPECT_THROW(stream(spec), ArgumentError);
}

}  // namespace
}  // namespace pernull
