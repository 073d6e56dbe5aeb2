#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "pernull/error.hpp"
#include "pernull/graph.hpp"

namespace pernull {

/// A matching stored as a mate map. mate[v] == kUnmatched for exposed vertices.
class Matching {
public:
    static constexpr Vertex kUnmatched = -1;

    Matching() = default;
    explicit Matching(std::size_t n) : mate_(n, kUnmatched) {}

    std::size_t order() const noexcept { return mate_.size(); }
    std::size_t size() const noexcept;

    bool is_matched(Vertex v) const { return mate_[static_cast<std::size_t>(v)] != kUnmatched; }
    Vertex mate_of(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }

    /// Adds the pair {u, v}. Both endpoints must currently be exposed.
    void match(Vertex u, Vertex v);

    /// Exposes v and its mate. No-op if v is already exposed.
    void unmatch(Vertex v);

    /// Matched pairs with u < v, ascending.
    std::vector<Edge> edges() const;

    bool is_perfect() const noexcept { return 2 * size() == order(); }
    bool is_near_perfect() const noexcept { return order() % 2 == 1 && 2 * size() + 1 == order(); }

    /// True iff mate is symmetric and every matched pair is an edge of g.
    bool is_valid_for(const Graph& g) const;

    std::span<const Vertex> mates() const noexcept { return mate_; }

private:
    std::vector<Vertex> mate_;
};

/// Edmonds' blossom algorithm. Vertices and neighbor lists are scanned in
/// ascending label order, so the result is reproducible.
Matching maximum_matching(const Graph& g);

/// Maximum matching of g - excluded, reported on the original labels.
Matching maximum_matching(const Graph& g, const VertexSet& excluded);

std::size_t matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);
bool has_near_perfect_matching(const Graph& g);

/// n odd and g - v has a perfect matching for every v. K1 qualifies; the null graph does not.
bool is_factor_critical(const Graph& g);

/// Gallai-Edmonds partition.
///
/// D holds the vertices missed by at least one maximum matching, computed as
/// {v : nu(g - v) == nu(g)}. B holds the vertices outside D with a neighbor in
/// D and C is the remainder. The components of g[D] are listed in order of
/// their smallest member; `singletons` and `factor_components` index into that
/// list and select components of order 1 and of order >= 3 respectively.
struct GEDecomposition {
    VertexSet d;
    VertexSet b;
    VertexSet c;
    std::vector<VertexSet> d_components;
    std::vector<std::size_t> singletons;
    std::vector<std::size_t> factor_components;
    std::size_t nu = 0;
};

GEDecomposition gallai_edmonds(const Graph& g);

/// Number of factor-critical components of order >= 3 left with an exposed
/// vertex by a maximum matching that covers as many singleton components of
/// g[D] as possible.
struct MStatistic {
    std::size_t value = 0;
    std::size_t saturated_singletons = 0;
    /// (B vertex, index into d_components) pairs of the optimal assignment.
    std::vector<std::pair<Vertex, std::size_t>> witness;
};

/// Solved on the bipartite graph between B and the components of g[D]: first a
/// maximum matching restricted to singleton components, then augmenting paths
/// until B is saturated. Augmentation never exposes a matched component, so the
/// singleton count of the first phase survives.
///
/// Requires a connected g and dec == gallai_edmonds(g).
MStatistic m_statistic(const Graph& g, const GEDecomposition& dec);

// Exponential reference implementations. Independent of the blossom code.

inline constexpr std::size_t kMatchingEnumerationLimit = 14;

/// Calls visit once for every maximum matching of g.
void for_each_maximum_matching(const Graph& g, const std::function<void(const Matching&)>& visit,
                               Guard guard = Guard::Enforce);

/// Union of the vertex sets left exposed by some maximum matching.
VertexSet exposable_vertices_by_enumeration(const Graph& g, Guard guard = Guard::Enforce);

/// M(G) by brute force: enumerates every maximum matching, keeps those covering
/// the most singleton components of g[D], and counts components of order >= 3
/// with exactly one exposed vertex. Throws InvariantViolation if that count is
/// not the same for every kept matching.
std::size_t m_statistic_oracle(const Graph& g, Guard guard = Guard::Enforce);

}  // namespace pernull
