#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pernull {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of vertex labels drawn from the universe {0..n-1}, stored as a bitset.
/// Graphs of up to 64 vertices use a single word.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const noexcept;
    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    /// Lowest member, or -1 for the empty set.
    Vertex front() const noexcept;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted and
/// duplicate-free; no self-loops. Values are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list. Duplicate edges collapse.
    /// Throws ArgumentError on self-loops or out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Neighborhood of v as a bitmask. Requires order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A cycle listed in traversal order; consecutive entries (cyclically) are adjacent.
struct CycleInfo {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    bool is_odd() const noexcept { return vertices.size() % 2 == 1; }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;    // new label -> old label
    std::vector<Vertex> from_original;  // old label -> new label, -1 if dropped
};

struct LineGraph {
    Graph graph;
    std::vector<Edge> edge_of;  // line-graph vertex -> edge of the source graph
};

// I/O

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Structure

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
/// G - S for a vertex set S.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop);
LineGraph line_graph(const Graph& g);

bool is_unicyclic(const Graph& g);
CycleInfo find_unique_cycle(const Graph& g);

/// Connected, at least one edge, and no bridges.
bool is_two_edge_connected(const Graph& g);

// Named families used throughout tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

}  // namespace pernull
