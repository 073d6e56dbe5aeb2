#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "pernull/corpus.hpp"
#include "pernull/error.hpp"
#include "pernull/graph.hpp"

namespace pernull {
namespace {

Graph from(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

TEST(Graph6, DecodesSmallGraphs) {
    EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
    EXPECT_EQ(parse_graph6("B?"), Graph(3));
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
    EXPECT_EQ(parse_graph6("?"), Graph(0));
    EXPECT_EQ(parse_graph6("@"), Graph(1));
}

TEST(Graph6, AcceptsHeaderAndTrailingNewline) {
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
    EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3));
    EXPECT_EQ(parse_graph6("Bw\r\n"), complete_graph(3));
}

TEST(Graph6, EncodesKnownStrings) {
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(to_graph6(Graph(3)), "B?");
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(petersen_graph()).size(), 1u + 8u);
}

TEST(Graph6, RoundTripsEveryLabeledGraphUpToFiveVertices) {
    for (std::size_t n = 0; n <= 5; ++n)
        enumerate_labeled_graphs(n, [](const Graph& g) { ASSERT_EQ(parse_graph6(to_graph6(g)), g); });
}

TEST(Graph6, RoundTripsLargerGraphs) {
    Rng rng(99);
    for (std::size_t n : {20u, 62u}) {
        const auto g = random_gnp(n, 0.4, rng);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, DecodesFourByteSizeForm) {
    // n = 63 uses the '~' prefix and an 18-bit size.
    std::string text = "~??~";
    text.append((63 * 62 / 2 + 5) / 6, '?');
    const auto g = parse_graph6(text);
    EXPECT_EQ(g.order(), 63u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(Graph6, RejectsMalformedInput) {
    auto position = [](const std::string& text) {
        try {
            parse_graph6(text);
        } catch (const FormatError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    EXPECT_EQ(position(""), 0);
    EXPECT_EQ(position("B"), 1);         // truncated
    EXPECT_EQ(position("B\x7f"), 1);     // byte out of range
    EXPECT_EQ(position("Bx"), 1);        // nonzero padding bits
    EXPECT_EQ(position("BwX"), 2);       // trailing garbage
    EXPECT_THROW(to_graph6(Graph(63)), ScaleError);
}

TEST(EdgeList, ParsesCommentsAndCount) {
    const auto g = parse_edge_list("# a path\n3\n0 1\n\n1 2  # middle\n");
    EXPECT_EQ(g, path_graph(3));
    EXPECT_EQ(parse_edge_list(to_edge_list(petersen_graph())), petersen_graph());
}

TEST(EdgeList, ReportsLineOfError) {
    try {
        parse_edge_list("3\n0 1\n1 x\n");
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_edge_list("3\n0 3\n"), FormatError);
    EXPECT_THROW(parse_edge_list("3\n1 1\n"), FormatError);
    EXPECT_THROW(parse_edge_list(""), FormatError);
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
    EXPECT_THROW(from(3, {{1, 1}}), ArgumentError);
    EXPECT_THROW(from(3, {{0, 3}}), ArgumentError);
    EXPECT_THROW(from(3, {{-1, 2}}), ArgumentError);
}

TEST(Graph, CollapsesDuplicateEdges) {
    const auto g = from(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, NamedFamilies) {
    EXPECT_EQ(path_graph(4).size(), 3u);
    EXPECT_EQ(cycle_graph(5).size(), 5u);
    EXPECT_EQ(complete_graph(5).size(), 10u);
    EXPECT_EQ(star_graph(3).order(), 4u);
    const auto p = petersen_graph();
    EXPECT_EQ(p.order(), 10u);
    EXPECT_EQ(p.size(), 15u);
    for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(p.degree(static_cast<Vertex>(v)), 3u);
}

TEST(VertexSet, BasicOperations) {
    VertexSet s(70);
    s.insert(3);
    s.insert(65);
    EXPECT_TRUE(s.contains(65));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.front(), 3);
    s.erase(3);
    EXPECT_EQ(s.members(), std::vector<Vertex>{65});
    EXPECT_THROW(s.insert(70), ArgumentError);
    EXPECT_EQ(VertexSet(4).front(), -1);
}

TEST(Components, SplitsDisjointUnion) {
    const auto g = from(6, {{0, 1}, {2, 3}, {3, 4}});
    const auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0].members(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(comps[1].members(), (std::vector<Vertex>{2, 3, 4}));
    EXPECT_EQ(comps[2].members(), (std::vector<Vertex>{5}));
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(Graph(1)));
    EXPECT_TRUE(is_connected(Graph(0)));
}

TEST(Subgraphs, InducedAndRemoval) {
    const auto c5 = cycle_graph(5);
    const auto keep = VertexSet(5, std::vector<Vertex>{0, 1, 3});
    const auto sub = induced_subgraph(c5, keep);
    EXPECT_EQ(sub.graph.order(), 3u);
    EXPECT_EQ(sub.graph.size(), 1u);
    EXPECT_EQ(sub.to_original, (std::vector<Vertex>{0, 1, 3}));
    EXPECT_EQ(sub.from_original[2], -1);
    EXPECT_EQ(remove_vertices(c5, VertexSet(5, std::vector<Vertex>{0})).graph, path_graph(4));
}

TEST(LineGraph, SmallExamples) {
    EXPECT_EQ(line_graph(path_graph(3)).graph, complete_graph(2));
    EXPECT_EQ(line_graph(path_graph(4)).graph, path_graph(3));
    EXPECT_EQ(line_graph(complete_graph(3)).graph.size(), 3u);
    EXPECT_EQ(line_graph(star_graph(4)).graph, complete_graph(4));
    const auto lp = line_graph(petersen_graph());
    EXPECT_EQ(lp.graph.order(), 15u);
    EXPECT_EQ(lp.graph.size(), 30u);
    EXPECT_EQ(lp.edge_of.size(), 15u);
}

TEST(LineGraph, AdjacencyMeansSharedEndpoint) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_gnp(8, 0.5, rng);
        const auto lg = line_graph(g);
        for (std::size_t a = 0; a < lg.edge_of.size(); ++a)
            for (std::size_t b = a + 1; b < lg.edge_of.size(); ++b) {
                const auto e = lg.edge_of[a], f = lg.edge_of[b];
                const bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
                EXPECT_EQ(lg.graph.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)), share);
            }
    }
}

TEST(Unicyclic, Recognition) {
    EXPECT_TRUE(is_unicyclic(cycle_graph(4)));
    EXPECT_FALSE(is_unicyclic(path_graph(4)));
    EXPECT_FALSE(is_unicyclic(complete_graph(4)));
    EXPECT_FALSE(is_unicyclic(from(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Unicyclic, FindsTheCycle) {
    // Triangle 1-2-3 with pendant paths 0-1 and 3-4-5.
    const auto g = from(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}});
    const auto cycle = find_unique_cycle(g);
    ASSERT_EQ(cycle.length(), 3u);
    EXPECT_TRUE(cycle.is_odd());
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.has_edge(cycle.vertices[i], cycle.vertices[(i + 1) % 3]));
    EXPECT_THROW(find_unique_cycle(path_graph(3)), PreconditionError);
}

TEST(TwoEdgeConnected, Recognition) {
    EXPECT_TRUE(is_two_edge_connected(cycle_graph(4)));
    EXPECT_TRUE(is_two_edge_connected(petersen_graph()));
    EXPECT_FALSE(is_two_edge_connected(path_graph(3)));
    EXPECT_FALSE(is_two_edge_connected(Graph(1)));
    // Two triangles joined by a bridge.
    EXPECT_FALSE(is_two_edge_connected(from(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})));
    // Two triangles sharing a vertex (a bowtie) has no bridge.
    EXPECT_TRUE(is_two_edge_connected(from(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
}

}  // namespace
}  // namespace pernull
