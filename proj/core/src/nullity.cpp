#include "pernull/nullity.hpp"

#include <algorithm>

#include "pernull/error.hpp"

namespace pernull {

std::string_view to_string(NullityCase c) {
    switch (c) {
        case NullityCase::PerfectMatching: return "PERFECT_MATCHING";
        case NullityCase::FEmpty: return "F_EMPTY";
        case NullityCase::General: return "GENERAL";
    }
    return "?";
}

std::string_view to_string(ZeroNullityCase c) {
    switch (c) {
        case ZeroNullityCase::None: return "none";
        case ZeroNullityCase::PerfectMatching: return "perfect_matching";
        case ZeroNullityCase::NoIsolatedInD: return "no_isolated_in_d";
        case ZeroNullityCase::SingletonsCoverable: return "singletons_coverable";
    }
    return "?";
}

NullityCase NullityReport::case_fired() const {
    auto has = [&](NullityCase c) {
        return std::any_of(components.begin(), components.end(),
                           [c](const ComponentNullity& x) { return x.case_fired == c; });
    };
    if (has(NullityCase::General)) return NullityCase::General;
    if (has(NullityCase::FEmpty)) return NullityCase::FEmpty;
    return NullityCase::PerfectMatching;
}

namespace {

ComponentNullity connected_nullity(const Graph& h) {
    ComponentNullity out;
    out.n = h.order();
    const auto dec = gallai_edmonds(h);
    out.nu = dec.nu;
    if (2 * dec.nu == out.n) {
        out.case_fired = NullityCase::PerfectMatching;
        out.eta = 0;
    } else if (dec.factor_components.empty()) {
        out.case_fired = NullityCase::FEmpty;
        out.eta = out.n - 2 * out.nu;
    } else {
        out.case_fired = NullityCase::General;
        out.m_stat = m_statistic(h, dec).value;
        out.eta = out.n - 2 * out.nu - out.m_stat;
    }
    return out;
}

void require_connected(const Graph& g, std::size_t min_order, const char* who) {
    if (g.order() < min_order || !is_connected(g))
        throw PreconditionError(std::string(who) + ": requires a connected graph on at least " +
                                std::to_string(min_order) + " vertices");
}

}  // namespace

NullityReport per_nullity_structural(const Graph& g) {
    NullityReport report;
    report.n = g.order();
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto part = connected_nullity(sub.graph);
        part.vertices = sub.to_original;
        report.nu += part.nu;
        report.m_stat += part.m_stat;
        report.eta_structural += part.eta;
        report.components.push_back(std::move(part));
    }
    return report;
}

ZeroNullityVerdict zero_nullity_characterization(const Graph& g) {
    require_connected(g, 2, "zero_nullity_characterization");
    const auto dec = gallai_edmonds(g);
    if (2 * dec.nu == g.order()) return {true, ZeroNullityCase::PerfectMatching};
    if (dec.singletons.empty()) return {true, ZeroNullityCase::NoIsolatedInD};
    // m_statistic maximizes the matched singletons over B-saturating assignments.
    if (m_statistic(g, dec).saturated_singletons == dec.singletons.size())
        return {true, ZeroNullityCase::SingletonsCoverable};
    return {false, ZeroNullityCase::None};
}

namespace {

struct CycleSplit {
    CycleInfo cycle;
    std::size_t nu = 0;
    std::size_t nu_outside = 0;  // nu(G - V(C))
};

CycleSplit split_on_cycle(const Graph& g, const char* who) {
    if (!is_unicyclic(g)) throw PreconditionError(std::string(who) + ": graph is not unicyclic");
    CycleSplit s;
    s.cycle = find_unique_cycle(g);
    s.nu = matching_number(g);
    VertexSet on_cycle(g.order(), s.cycle.vertices);
    s.nu_outside = matching_number(remove_vertices(g, on_cycle).graph);
    return s;
}

}  // namespace

std::size_t unicyclic_nullity(const Graph& g) {
    const auto s = split_on_cycle(g, "unicyclic_nullity");
    const auto n = g.order();
    const auto ell = s.cycle.length();
    if (s.cycle.is_odd() && s.nu == (ell - 1) / 2 + s.nu_outside) return n - 2 * s.nu - 1;
    return n - 2 * s.nu;
}

bool unicyclic_zero_check(const Graph& g) {
    const auto s = split_on_cycle(g, "unicyclic_zero_check");
    const auto n = g.order();
    const bool odd_cycle = s.cycle.length() == n && s.cycle.is_odd();
    const bool perfect = 2 * s.nu == n;
    const auto outside = n - s.cycle.length();
    const bool perfect_outside = 2 * s.nu_outside == outside;
    return odd_cycle || perfect || perfect_outside;
}

LineGraphMatchingReport line_graph_matching_check(const Graph& g) {
    require_connected(g, 2, "line_graph_matching_check");
    LineGraphMatchingReport out;
    out.source_edges = g.size();
    out.source_two_edge_connected = is_two_edge_connected(g);
    const auto lg = line_graph(g).graph;
    out.lg_perfect = has_perfect_matching(lg);
    out.lg_near_perfect = has_near_perfect_matching(lg);
    out.lg_factor_critical = is_factor_critical(lg);
    return out;
}

std::size_t line_graph_nullity_check(const Graph& g) {
    if (g.order() < 2)
        throw PreconditionError("line_graph_nullity_check: requires a nontrivial graph");
    const auto eta = per_nullity_structural(line_graph(g).graph).eta_structural;
    if (is_connected(g) && eta > 1)
        throw InvariantViolation("line_graph_nullity_check: per-nullity of L(G) is " + std::to_string(eta) +
                                 ", expected 0 or 1");
    return eta;
}

}  // namespace pernull
