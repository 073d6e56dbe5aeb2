#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pernull/graph.hpp"
#include "pernull/matching.hpp"

namespace pernull {

/// Which branch of the nullity formula produced a component's value.
enum class NullityCase {
    PerfectMatching,  // n - 2nu, perfect matching
    FEmpty,           // n - 2nu, no component of g[D] of order >= 3
    General,          // n - 2nu - M
};

std::string_view to_string(NullityCase c);

struct ComponentNullity {
    std::vector<Vertex> vertices;  // labels in the host graph
    std::size_t n = 0;
    std::size_t nu = 0;
    std::size_t m_stat = 0;
    std::size_t eta = 0;
    NullityCase case_fired = NullityCase::PerfectMatching;
};

struct NullityReport {
    std::size_t n = 0;
    std::size_t nu = 0;
    std::size_t m_stat = 0;
    std::size_t eta_structural = 0;
    std::optional<std::size_t> eta_oracle;
    std::vector<ComponentNullity> components;

    /// General if any component used the M(G) branch, else FEmpty if any
    /// component lacked a perfect matching, else PerfectMatching.
    NullityCase case_fired() const;
};

/// Per-nullity from matchings alone, summed over connected components:
/// n - 2nu when a component has a perfect matching or no factor-critical
/// component of order >= 3 in g[D], and n - 2nu - M otherwise.
NullityReport per_nullity_structural(const Graph& g);

enum class ZeroNullityCase {
    None,
    PerfectMatching,      // (i)
    NoIsolatedInD,        // (ii) D nonempty, g[D] has no singleton components
    SingletonsCoverable,  // (iii) some maximum matching covers every singleton of g[D]
};

std::string_view to_string(ZeroNullityCase c);

struct ZeroNullityVerdict {
    bool zero = false;
    ZeroNullityCase which = ZeroNullityCase::None;
};

/// Decides eta == 0 from the Gallai-Edmonds structure. Case (iii) is a
/// bipartite feasibility question: can B be saturated while every singleton
/// component is matched. Requires a connected graph on at least 2 vertices.
ZeroNullityVerdict zero_nullity_characterization(const Graph& g);

/// Unicyclic closed form: n - 2nu - 1 when the cycle is odd and
/// nu(G) == (l-1)/2 + nu(G - V(C)), else n - 2nu.
std::size_t unicyclic_nullity(const Graph& g);

/// True iff g is an odd cycle, has a perfect matching, or g - V(C) has one.
bool unicyclic_zero_check(const Graph& g);

struct LineGraphMatchingReport {
    std::size_t source_edges = 0;
    bool source_two_edge_connected = false;
    bool lg_perfect = false;
    bool lg_near_perfect = false;
    bool lg_factor_critical = false;
};

/// Measures matching properties of L(g) for a nontrivial connected g.
LineGraphMatchingReport line_graph_matching_check(const Graph& g);

/// Structural per-nullity of L(g). For connected g a value outside {0, 1}
/// throws InvariantViolation.
std::size_t line_graph_nullity_check(const Graph& g);

}  // namespace pernull
