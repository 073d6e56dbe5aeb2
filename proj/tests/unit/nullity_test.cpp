#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "pernull/corpus.hpp"
#include "pernull/error.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"

namespace pernull {
namespace {

Graph from(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

std::size_t eta(const Graph& g) { return per_nullity_structural(g).eta_structural; }

TEST(StructuralNullity, SmallExamples) {
    EXPECT_EQ(eta(complete_graph(2)), 0u);
    EXPECT_EQ(eta(complete_graph(3)), 0u);
    EXPECT_EQ(eta(path_graph(3)), 1u);
    EXPECT_EQ(eta(Graph(1)), 1u);
    EXPECT_EQ(eta(Graph(0)), 0u);
    EXPECT_EQ(eta(star_graph(4)), 3u);
    EXPECT_EQ(eta(petersen_graph()), 0u);
}

TEST(StructuralNullity, EmptyGraphHasFullNullity) {
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(eta(Graph(n)), n);
}

TEST(StructuralNullity, PathsAndCycles) {
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(eta(path_graph(n)), n % 2) << n;
        if (n >= 3) EXPECT_EQ(eta(cycle_graph(n)), 0u) << n;
    }
}

TEST(StructuralNullity, ReportsCaseAndComponents) {
    const auto k2 = per_nullity_structural(complete_graph(2));
    EXPECT_EQ(k2.case_fired(), NullityCase::PerfectMatching);
    const auto empty = per_nullity_structural(Graph(3));
    EXPECT_EQ(empty.case_fired(), NullityCase::FEmpty);
    EXPECT_EQ(empty.components.size(), 3u);
    const auto tri = per_nullity_structural(complete_graph(3));
    EXPECT_EQ(tri.case_fired(), NullityCase::General);
    EXPECT_EQ(tri.m_stat, 1u);
    EXPECT_EQ(tri.nu, 1u);
    EXPECT_EQ(to_string(NullityCase::FEmpty), "F_EMPTY");
}

TEST(StructuralNullity, AddsOverComponents) {
    const auto g = from(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}});
    const auto r = per_nullity_structural(g);
    ASSERT_EQ(r.components.size(), 4u);
    EXPECT_EQ(r.eta_structural, 0u + 1u + 1u + 1u);
    EXPECT_EQ(r.components[1].vertices, (std::vector<Vertex>{3, 4, 5}));
}

TEST(StructuralNullity, MatchesPermutationExpansionUpToFive) {
    for (std::size_t n = 1; n <= 5; ++n)
        enumerate_labeled_graphs(n, [](const Graph& g) {
            ASSERT_EQ(eta(g), testing::naive_per_nullity(g)) << to_graph6(g);
        });
}

TEST(StructuralNullity, MatchesSachsOracleOnRandomGraphs) {
    Rng rng(31);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto g = random_gnp(1 + rng.below(13), 0.05 + 0.3 * rng.unit(), rng);
        ASSERT_EQ(eta(g), per_nullity_oracle(g)) << to_graph6(g);
    }
}

TEST(StructuralNullity, InvariantUnderRelabeling) {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_gnp(9, 0.3, rng);
        std::vector<int> perm(9);
        for (int i = 0; i < 9; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        EXPECT_EQ(eta(g), eta(testing::relabel(g, perm))) << to_graph6(g);
    }
}

TEST(StructuralNullity, Bounds) {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_gnp(2 + rng.below(20), 0.2, rng);
        const auto e = eta(g);
        if (g.size() > 0) EXPECT_LE(e + 2, g.order());
        EXPECT_EQ(e == g.order(), g.size() == 0);
    }
}

TEST(ZeroNullity, Cases) {
    EXPECT_EQ(zero_nullity_characterization(cycle_graph(4)).which, ZeroNullityCase::PerfectMatching);
    EXPECT_EQ(zero_nullity_characterization(cycle_graph(5)).which, ZeroNullityCase::NoIsolatedInD);
    const auto p3 = zero_nullity_characterization(path_graph(3));
    EXPECT_FALSE(p3.zero);
    EXPECT_EQ(p3.which, ZeroNullityCase::None);
    // Barrier 0 between a triangle and a pendant: the pendant gets matched.
    const auto g = from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {0, 4}});
    EXPECT_EQ(zero_nullity_characterization(g).which, ZeroNullityCase::SingletonsCoverable);
    EXPECT_EQ(per_nullity_oracle(g), 0u);
}

TEST(ZeroNullity, RequiresConnectedNontrivialGraph) {
    EXPECT_THROW(zero_nullity_characterization(Graph(1)), PreconditionError);
    EXPECT_THROW(zero_nullity_characterization(Graph(2)), PreconditionError);
}

TEST(ZeroNullity, AgreesWithOracleOnConnectedGraphs) {
    for (std::size_t n = 2; n <= 6; ++n)
        enumerate_labeled_graphs(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            ASSERT_EQ(zero_nullity_characterization(g).zero, per_nullity_oracle(g) == 0) << to_graph6(g);
        });
}

TEST(Unicyclic, ClosedForm) {
    EXPECT_EQ(unicyclic_nullity(cycle_graph(3)), 0u);
    EXPECT_EQ(unicyclic_nullity(cycle_graph(4)), 0u);
    EXPECT_EQ(unicyclic_nullity(cycle_graph(5)), 0u);
    // Triangle with one pendant on a cycle vertex: perfect matching.
    const auto pendant = from(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    EXPECT_EQ(unicyclic_nullity(pendant), 0u);
    // Triangle with two pendants on one cycle vertex.
    const auto two = from(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    EXPECT_EQ(unicyclic_nullity(two), per_nullity_oracle(two));
    EXPECT_THROW(unicyclic_nullity(path_graph(4)), PreconditionError);
}

TEST(Unicyclic, SandwichAndZeroCheckOnRandomGraphs) {
    Rng rng(43);
    for (int trial = 0; trial < 800; ++trial) {
        const auto g = random_unicyclic(3 + rng.below(12), rng);
        const auto oracle = per_nullity_oracle(g);
        const auto upper = g.order() - 2 * matching_number(g);
        ASSERT_LE(oracle, upper) << to_graph6(g);
        ASSERT_GE(oracle + 1, upper) << to_graph6(g);
        ASSERT_EQ(unicyclic_nullity(g), oracle) << to_graph6(g);
        ASSERT_EQ(unicyclic_zero_check(g), oracle == 0) << to_graph6(g);
    }
}

TEST(Unicyclic, ZeroCheckExamples) {
    EXPECT_TRUE(unicyclic_zero_check(cycle_graph(7)));
    EXPECT_TRUE(unicyclic_zero_check(cycle_graph(6)));
    const auto two = from(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    EXPECT_FALSE(unicyclic_zero_check(two));
}

TEST(LineGraph, NullityExamples) {
    EXPECT_EQ(line_graph_nullity_check(path_graph(3)), 0u);
    EXPECT_EQ(line_graph_nullity_check(path_graph(4)), 1u);
    EXPECT_EQ(line_graph_nullity_check(complete_graph(3)), 0u);
    EXPECT_EQ(per_nullity_oracle(line_graph(path_graph(4)).graph), 1u);
    EXPECT_THROW(line_graph_nullity_check(Graph(1)), PreconditionError);
}

TEST(LineGraph, MatchingReport) {
    const auto r = line_graph_matching_check(cycle_graph(5));
    EXPECT_EQ(r.source_edges, 5u);
    EXPECT_TRUE(r.source_two_edge_connected);
    EXPECT_FALSE(r.lg_perfect);
    EXPECT_TRUE(r.lg_near_perfect);
    EXPECT_TRUE(r.lg_factor_critical);
    const auto p = line_graph_matching_check(path_graph(5));
    EXPECT_TRUE(p.lg_perfect);
    EXPECT_FALSE(p.source_two_edge_connected);
    EXPECT_THROW(line_graph_matching_check(Graph(2)), PreconditionError);
}

TEST(LineGraph, NullityIsZeroOrOneForConnectedGraphs) {
    Rng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_tree_plus(2 + rng.below(9), 0.2, rng);
        ASSERT_LE(line_graph_nullity_check(g), 1u) << to_graph6(g);
    }
}

TEST(FactorCritical, NullityZero) {
    for (std::size_t n = 3; n <= 5; n += 2)
        enumerate_labeled_graphs(n, [](const Graph& g) {
            if (!is_factor_critical(g)) return;
            ASSERT_EQ(eta(g), 0u) << to_graph6(g);
            ASSERT_EQ(per_nullity_structural(g).m_stat, 1u) << to_graph6(g);
        });
    EXPECT_EQ(eta(Graph(1)), 1u);  // K1 is factor-critical but not covered
}

}  // namespace
}  // namespace pernull
