#include "pernull/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "pernull/error.hpp"
#include "pernull/matching.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"

namespace pernull {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string describe(const Graph& g) {
    if (g.order() <= 62) return to_graph6(g);
    std::string out = "edges:" + std::to_string(g.order());
    for (const auto& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return out;
}

/// Lazily computed per-graph quantities shared between checks.
class GraphFacts {
public:
    explicit GraphFacts(const Graph& g) : g(g) {}

    const Graph& g;

    std::size_t n() const { return g.order(); }

    bool connected() {
        if (!connected_) connected_ = is_connected(g);
        return *connected_;
    }

    const NullityReport& structural() {
        if (!structural_) structural_ = per_nullity_structural(g);
        return *structural_;
    }

    const GEDecomposition& dec() {
        if (!dec_) dec_ = gallai_edmonds(g);
        return *dec_;
    }

    bool perfect() { return 2 * dec().nu == n(); }

    bool sachs_available() const { return n() <= kSachsLimit; }

    const PermPolynomial& sachs() {
        if (!sachs_) sachs_ = perm_polynomial_sachs(g);
        return *sachs_;
    }

    std::optional<std::size_t> oracle_eta() {
        if (!sachs_available()) return std::nullopt;
        return sachs().zero_root_multiplicity();
    }

    bool factor_critical() {
        if (!factor_critical_) factor_critical_ = is_factor_critical(g);
        return *factor_critical_;
    }

    const LineGraphMatchingReport& line_report() {
        if (!line_report_) line_report_ = line_graph_matching_check(g);
        return *line_report_;
    }

private:
    std::optional<bool> connected_;
    std::optional<NullityReport> structural_;
    std::optional<GEDecomposition> dec_;
    std::optional<PermPolynomial> sachs_;
    std::optional<bool> factor_critical_;
    std::optional<LineGraphMatchingReport> line_report_;
};

using Outcome = CheckOutcome;

Outcome compare(std::size_t expected, std::size_t got) {
    return expected == got ? Outcome::pass() : Outcome::fail(str(expected), str(got));
}

Outcome check_oracle_equivalence(GraphFacts& f) {
    auto oracle = f.oracle_eta();
    if (!oracle) return Outcome::skip();
    return compare(*oracle, f.structural().eta_structural);
}

Outcome check_sachs_vs_interpolation(GraphFacts& f) {
    if (f.n() > kInterpolationLimit) return Outcome::skip();
    const auto interp = perm_polynomial_interpolation(f.g);
    const auto& sachs = f.sachs();
    if (interp == sachs) return Outcome::pass();
    return Outcome::fail(interp.to_string(), sachs.to_string());
}

Outcome check_max_sachs_consistency(GraphFacts& f) {
    auto oracle = f.oracle_eta();
    if (!oracle) return Outcome::skip();
    const auto s = max_sachs_subgraph(f.g);
    if (!is_sachs_subgraph_of(s, f.g)) return Outcome::fail("a Sachs subgraph", "invalid subgraph");
    return compare(f.n() - *oracle, s.order());
}

Outcome check_sign_pattern(GraphFacts& f) {
    if (!f.sachs_available()) return Outcome::skip();
    const auto& b = f.sachs().coeffs;
    if (b.empty() || b[0] != 1) return Outcome::fail("b_0 = 1", "b_0 != 1");
    if (b.size() > 1 && b[1] != 0) return Outcome::fail("b_1 = 0", "b_1 = " + b[1].str());
    for (std::size_t k = 0; k < b.size(); ++k) {
        const bool negative = k % 2 == 1 ? b[k] > 0 : b[k] < 0;
        if (negative) return Outcome::fail("(-1)^k b_k >= 0", "b_" + str(k) + " = " + b[k].str());
    }
    return Outcome::pass();
}

Outcome check_additivity(GraphFacts& f) {
    if (!f.sachs_available()) return Outcome::skip();
    PermPolynomial product{{BigInt(1)}};
    std::size_t eta_sum = 0;
    for (const auto& comp : connected_components(f.g)) {
        const auto part = perm_polynomial_sachs(induced_subgraph(f.g, comp).graph);
        eta_sum += part.zero_root_multiplicity();
        product = multiply(product, part);
    }
    if (product != f.sachs()) return Outcome::fail(product.to_string(), f.sachs().to_string());
    return compare(eta_sum, f.sachs().zero_root_multiplicity());
}

Outcome check_nullity_bounds(GraphFacts& f) {
    const auto eta = f.structural().eta_structural;
    const auto n = f.n();
    if (eta > n) return Outcome::fail("eta <= " + str(n), str(eta));
    if (f.g.size() > 0 && eta + 2 > n) return Outcome::fail("eta <= n-2 = " + str(n - 2), str(eta));
    if ((eta == n) != (f.g.size() == 0))
        return Outcome::fail("eta == n exactly for edgeless graphs", "eta " + str(eta) + " with " + str(f.g.size()) + " edges");
    return Outcome::pass();
}

Outcome check_gallai_edmonds(GraphFacts& f) {
    const auto& dec = f.dec();
    const auto& g = f.g;
    const auto n = f.n();
    for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        if (dec.d.contains(vx) + dec.b.contains(vx) + dec.c.contains(vx) != 1)
            return Outcome::fail("D, B, C partition V", "vertex " + str(v) + " misplaced");
        if (dec.c.contains(vx))
            for (Vertex u : g.neighbors(vx))
                if (dec.d.contains(u)) return Outcome::fail("no C-D edges", "edge " + str(v) + "-" + str(std::size_t(u)));
        if (dec.b.contains(vx) &&
            std::none_of(g.neighbors(vx).begin(), g.neighbors(vx).end(), [&](Vertex u) { return dec.d.contains(u); }))
            return Outcome::fail("every B vertex has a D neighbor", "vertex " + str(v));
    }
    std::vector<long> comp_of(n, -1);
    for (std::size_t i = 0; i < dec.d_components.size(); ++i) {
        const auto& comp = dec.d_components[i];
        if (comp.size() % 2 == 0) return Outcome::fail("odd components of G[D]", "order " + str(comp.size()));
        if (!is_factor_critical(induced_subgraph(g, comp).graph))
            return Outcome::fail("(i) components of G[D] factor-critical", "component " + str(i) + " is not");
        for (Vertex v : comp.members()) comp_of[static_cast<std::size_t>(v)] = static_cast<long>(i);
    }
    if (!has_perfect_matching(induced_subgraph(g, dec.c).graph) && !dec.c.empty())
        return Outcome::fail("(ii) G[C] has a perfect matching", "it does not");

    const auto m = maximum_matching(g);
    if (!m.is_valid_for(g) || m.size() != dec.nu) return Outcome::fail("valid maximum matching", "blossom output invalid");
    std::vector<std::size_t> inside(dec.d_components.size(), 0);
    std::vector<int> hit_from_b(dec.d_components.size(), 0);
    for (const auto& e : m.edges()) {
        const long cu = comp_of[static_cast<std::size_t>(e.u)];
        const long cv = comp_of[static_cast<std::size_t>(e.v)];
        if (cu >= 0 && cu == cv) ++inside[static_cast<std::size_t>(cu)];
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        if (dec.c.contains(vx) && (!m.is_matched(vx) || !dec.c.contains(m.mate_of(vx))))
            return Outcome::fail("(iii) C perfectly matched within C", "vertex " + str(v));
        if (dec.b.contains(vx)) {
            if (!m.is_matched(vx) || !dec.d.contains(m.mate_of(vx)))
                return Outcome::fail("(iii) B matched into D", "vertex " + str(v));
            if (hit_from_b[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(m.mate_of(vx))])]++)
                return Outcome::fail("(iii) B matched into distinct components", "vertex " + str(v));
        }
    }
    for (std::size_t i = 0; i < dec.d_components.size(); ++i)
        if (2 * inside[i] + 1 != dec.d_components[i].size())
            return Outcome::fail("(iii) near-perfect matching of each D component", "component " + str(i));
    if (2 * dec.nu + dec.d_components.size() != n + dec.b.size())
        return Outcome::fail("(iv) nu = (|V| - c(D) + |B|)/2 = " +
                                 std::to_string((static_cast<long>(n) - static_cast<long>(dec.d_components.size()) +
                                                 static_cast<long>(dec.b.size())) / 2.0),
                             str(dec.nu));
    return Outcome::pass();
}

Outcome check_d_set_oracle(GraphFacts& f) {
    if (f.n() > kMatchingEnumerationLimit) return Outcome::skip();
    const auto oracle = exposable_vertices_by_enumeration(f.g);
    if (oracle == f.dec().d) return Outcome::pass();
    auto list = [](const VertexSet& s) {
        std::string out = "{";
        for (Vertex v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
        return out + "}";
    };
    return Outcome::fail(list(oracle), list(f.dec().d));
}

Outcome check_blossom_vs_enumeration(GraphFacts& f) {
    if (f.n() > kMatchingEnumerationLimit) return Outcome::skip();
    std::size_t nu = 0;
    bool first = true;
    for_each_maximum_matching(f.g, [&](const Matching& m) {
        if (first) nu = m.size();
        first = false;
    });
    const auto m = maximum_matching(f.g);
    if (!m.is_valid_for(f.g)) return Outcome::fail("valid matching", "invalid mate map");
    return compare(nu, m.size());
}

Outcome check_m_statistic(GraphFacts& f) {
    if (!f.connected() || f.n() > kMatchingEnumerationLimit) return Outcome::skip();
    return compare(m_statistic_oracle(f.g), m_statistic(f.g, f.dec()).value);
}

Outcome check_uncovered_f_component(GraphFacts& f) {
    if (!f.connected() || f.perfect() || f.dec().factor_components.empty()) return Outcome::skip();
    const auto value = m_statistic(f.g, f.dec()).value;
    return value >= 1 ? Outcome::pass() : Outcome::fail(">= 1", str(value));
}

bool d_has_edges(const Graph& g, const GEDecomposition& dec) {
    for (const auto& e : g.edges())
        if (dec.d.contains(e.u) && dec.d.contains(e.v)) return true;
    return false;
}

Outcome check_matching_bound_equivalence(GraphFacts& f) {
    if (!f.sachs_available()) return Outcome::skip();
    for (const auto& comp : connected_components(f.g)) {
        const auto h = induced_subgraph(f.g, comp).graph;
        const auto dec = gallai_edmonds(h);
        const auto eta = per_nullity_oracle(h);
        const bool lhs = eta == h.order() - 2 * dec.nu;
        const bool rhs = 2 * dec.nu == h.order() || !d_has_edges(h, dec);
        if (lhs != rhs)
            return Outcome::fail("eta = n - 2nu iff (perfect matching or E(G[D]) empty)",
                                 "eta " + str(eta) + ", n - 2nu " + str(h.order() - 2 * dec.nu) +
                                     ", perfect-or-edgeless " + str(rhs));
    }
    return Outcome::pass();
}

Outcome check_f_empty_equivalence(GraphFacts& f) {
    const bool f_empty = f.dec().factor_components.empty();
    const bool edgeless = !d_has_edges(f.g, f.dec());
    return f_empty == edgeless ? Outcome::pass() : Outcome::fail("F empty iff E(G[D]) empty", str(f_empty) + " vs " + str(edgeless));
}

Outcome check_zero_nullity(GraphFacts& f) {
    if (!f.connected() || f.n() < 2) return Outcome::skip();
    auto oracle = f.oracle_eta();
    if (!oracle) return Outcome::skip();
    const auto verdict = zero_nullity_characterization(f.g);
    if (verdict.zero == (*oracle == 0)) return Outcome::pass();
    return Outcome::fail("eta == 0 is " + str(*oracle == 0),
                         std::string("verdict ") + str(verdict.zero) + " (" + std::string(to_string(verdict.which)) + ")");
}

Outcome check_unicyclic_sandwich(GraphFacts& f) {
    if (!is_unicyclic(f.g)) return Outcome::skip();
    auto oracle = f.oracle_eta();
    const auto eta = oracle ? *oracle : f.structural().eta_structural;
    const auto upper = f.n() - 2 * f.dec().nu;
    if (eta <= upper && eta + 1 >= upper) return Outcome::pass();
    return Outcome::fail("eta in [" + str(upper == 0 ? 0 : upper - 1) + ", " + str(upper) + "]", str(eta));
}

Outcome check_unicyclic_thm(GraphFacts& f) {
    if (!is_unicyclic(f.g)) return Outcome::skip();
    const auto closed = unicyclic_nullity(f.g);
    const auto structural = f.structural().eta_structural;
    if (closed != structural) return Outcome::fail("structural " + str(structural), "closed form " + str(closed));
    auto oracle = f.oracle_eta();
    if (oracle && *oracle != closed) return Outcome::fail("oracle " + str(*oracle), "closed form " + str(closed));
    return Outcome::pass();
}

Outcome check_unicyclic_zero(GraphFacts& f) {
    if (!is_unicyclic(f.g)) return Outcome::skip();
    auto oracle = f.oracle_eta();
    const auto eta = oracle ? *oracle : f.structural().eta_structural;
    const bool predicted = unicyclic_zero_check(f.g);
    return predicted == (eta == 0) ? Outcome::pass() : Outcome::fail("eta == 0 is " + str(eta == 0), "check " + str(predicted));
}

bool line_graph_applicable(GraphFacts& f) { return f.n() >= 2 && f.connected(); }

Outcome check_line_graph_perfect(GraphFacts& f) {
    if (!line_graph_applicable(f)) return Outcome::skip();
    const auto& r = f.line_report();
    const bool even = r.source_edges % 2 == 0;
    return r.lg_perfect == even ? Outcome::pass()
                                : Outcome::fail("perfect matching in L(G) iff |E| even (|E| = " + str(r.source_edges) + ")",
                                                str(r.lg_perfect));
}

Outcome check_line_graph_near_perfect(GraphFacts& f) {
    if (!line_graph_applicable(f) || f.g.size() < 3 || f.g.size() % 2 == 0) return Outcome::skip();
    return f.line_report().lg_near_perfect ? Outcome::pass() : Outcome::fail("near-perfect matching in L(G)", "none");
}

Outcome check_line_graph_factor_critical(GraphFacts& f) {
    if (!line_graph_applicable(f) || f.g.size() < 3 || f.g.size() % 2 == 0) return Outcome::skip();
    if (!f.line_report().source_two_edge_connected) return Outcome::skip();
    return f.line_report().lg_factor_critical ? Outcome::pass() : Outcome::fail("L(G) factor-critical", "it is not");
}

Outcome check_line_graph_nullity(GraphFacts& f) {
    if (!line_graph_applicable(f)) return Outcome::skip();
    const auto eta = line_graph_nullity_check(f.g);
    const auto lg = line_graph(f.g).graph;
    if (lg.order() <= kSachsLimit) {
        // Sachs terms never cancel, so the zero-root multiplicity is n minus the
        // largest Sachs subgraph; cheaper than expanding the polynomial of L(G).
        const auto oracle = lg.order() - max_sachs_subgraph(lg).order();
        if (oracle != eta) return Outcome::fail("oracle " + str(oracle), "structural " + str(eta));
    }
    return Outcome::pass();
}

Outcome check_factor_critical(GraphFacts& f) {
    // K1 is factor-critical yet has eta = 1; the statement concerns n >= 3.
    if (f.n() < 3 || !f.factor_critical()) return Outcome::skip();
    const auto structural = f.structural().eta_structural;
    if (structural != 0) return Outcome::fail("structural 0", str(structural));
    if (!f.sachs_available()) return Outcome::pass();
    if (auto oracle = f.oracle_eta(); *oracle != 0) return Outcome::fail("oracle 0", str(*oracle));
    const auto s = max_sachs_subgraph(f.g);
    if (!is_sachs_subgraph_of(s, f.g) || s.order() != f.n())
        return Outcome::fail("spanning Sachs subgraph", "covers " + str(s.order()));
    return Outcome::pass();
}

using CheckFn = Outcome (*)(GraphFacts&);

struct CheckEntry {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries{
        {{"oracle_equivalence", "structural nullity equals the Sachs-polynomial nullity"}, check_oracle_equivalence},
        {{"sachs_vs_interpolation", "Sachs enumeration and Ryser interpolation give the same polynomial"},
         check_sachs_vs_interpolation},
        {{"max_sachs_consistency", "n minus the largest Sachs subgraph equals the oracle nullity"},
         check_max_sachs_consistency},
        {{"sign_pattern", "b_0 = 1, b_1 = 0 and (-1)^k b_k >= 0"}, check_sign_pattern},
        {{"additivity", "polynomial multiplies and nullity adds over components"}, check_additivity},
        {{"nullity_bounds", "0 <= eta <= n-2 with an edge; eta = n iff edgeless"}, check_nullity_bounds},
        {{"gallai_edmonds", "all four Gallai-Edmonds clauses hold for the computed partition"}, check_gallai_edmonds},
        {{"d_set_oracle", "D equals the union of vertices exposed by some maximum matching"}, check_d_set_oracle},
        {{"blossom_vs_enumeration", "blossom matching size equals brute-force matching number"},
         check_blossom_vs_enumeration},
        {{"m_statistic", "bipartite M(G) equals the brute-force M(G)"}, check_m_statistic},
        {{"uncovered_f_component", "M(G) >= 1 when F is nonempty and there is no perfect matching"},
         check_uncovered_f_component},
        {{"matching_bound_equivalence", "eta = n - 2nu iff perfect matching or E(G[D]) empty"}, check_matching_bound_equivalence},
        {{"f_empty_equivalence", "F empty iff G[D] has no edges"}, check_f_empty_equivalence},
        {{"zero_nullity", "zero-nullity characterization agrees with the oracle"}, check_zero_nullity},
        {{"unicyclic_sandwich", "n - 2nu - 1 <= eta <= n - 2nu for unicyclic graphs"}, check_unicyclic_sandwich},
        {{"unicyclic_thm", "unicyclic closed form equals structural and oracle nullity"}, check_unicyclic_thm},
        {{"unicyclic_zero", "unicyclic zero test agrees with eta == 0"}, check_unicyclic_zero},
        {{"line_graph_perfect", "L(G) has a perfect matching iff |E(G)| is even"}, check_line_graph_perfect},
        {{"line_graph_near_perfect", "L(G) has a near-perfect matching when |E(G)| is odd and >= 3"},
         check_line_graph_near_perfect},
        {{"line_graph_factor_critical", "L(G) is factor-critical for 2-edge-connected G with odd |E| >= 3"},
         check_line_graph_factor_critical},
        {{"line_graph_nullity", "per-nullity of L(G) is 0 or 1 and matches the oracle"}, check_line_graph_nullity},
        {{"factor_critical", "factor-critical graphs on >= 3 vertices have eta = 0 and a spanning Sachs subgraph"},
         check_factor_critical},
    };
    return entries;
}

const CheckEntry& lookup(std::string_view name) {
    for (const auto& e : registry())
        if (e.info.name == name) return e;
    throw ArgumentError("unknown check '" + std::string(name) + "'");
}

Outcome guarded(const CheckEntry& entry, GraphFacts& facts) {
    try {
        return entry.fn(facts);
    } catch (const Error& e) {
        return Outcome::fail("no error", std::string("exception: ") + e.what());
    }
}

}  // namespace

const std::vector<CheckInfo>& available_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

CheckOutcome run_check(std::string_view name, const Graph& g) {
    const auto& entry = lookup(name);
    GraphFacts facts(g);
    return guarded(entry, facts);
}

namespace {

struct WorkerState {
    std::vector<CheckTally> tallies;
    std::vector<Failure> failures;
    std::size_t failure_total = 0;
};

void trim(std::vector<Failure>& failures) {
    std::sort(failures.begin(), failures.end());
    if (failures.size() > kFailureCap) failures.resize(kFailureCap);
}

void process(const std::vector<Graph>& batch, std::size_t begin, std::size_t end,
             const std::vector<const CheckEntry*>& selected, WorkerState& state) {
    for (std::size_t i = begin; i < end; ++i) {
        GraphFacts facts(batch[i]);
        for (std::size_t c = 0; c < selected.size(); ++c) {
            const auto outcome = guarded(*selected[c], facts);
            auto& tally = state.tallies[c];
            switch (outcome.status) {
                case CheckOutcome::Status::Pass: ++tally.passed; break;
                case CheckOutcome::Status::Skip: ++tally.skipped; break;
                case CheckOutcome::Status::Fail:
                    ++tally.failed;
                    ++state.failure_total;
                    state.failures.push_back(
                        {describe(batch[i]), std::string(selected[c]->info.name), outcome.expected, outcome.got});
                    if (state.failures.size() > 4 * kFailureCap) trim(state.failures);
                    break;
            }
        }
    }
}

}  // namespace

VerifyResult run_verification(const CorpusSpec& spec, const std::vector<std::string>& checks,
                              const VerifyOptions& options) {
    std::vector<const CheckEntry*> selected;
    if (checks.empty()) {
        for (const auto& e : registry()) selected.push_back(&e);
    } else {
        for (const auto& name : checks) selected.push_back(&lookup(name));
    }

    VerifyResult result;
    result.corpus = spec;
    const std::size_t threads = std::max<std::size_t>(1, options.threads);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch);
    std::vector<WorkerState> workers(threads);
    for (auto& w : workers) w.tallies.assign(selected.size(), {});

    std::vector<Graph> batch;
    auto flush = [&] {
        if (batch.empty()) return;
        const std::size_t per = (batch.size() + threads - 1) / threads;
        if (threads == 1) {
            process(batch, 0, batch.size(), selected, workers[0]);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < threads; ++t) {
                const auto begin = std::min(batch.size(), t * per);
                const auto end = std::min(batch.size(), begin + per);
                if (begin < end) pool.emplace_back(process, std::cref(batch), begin, end, std::cref(selected), std::ref(workers[t]));
            }
            for (auto& th : pool) th.join();
        }
        batch.clear();
    };
    for_each_graph(spec, [&](const Graph& g) {
        ++result.graphs;
        batch.push_back(g);
        if (batch.size() >= batch_size) flush();
    });
    flush();

    for (std::size_t c = 0; c < selected.size(); ++c) {
        CheckTally total;
        for (const auto& w : workers) {
            total.passed += w.tallies[c].passed;
            total.failed += w.tallies[c].failed;
            total.skipped += w.tallies[c].skipped;
        }
        result.checks[std::string(selected[c]->info.name)] = total;
    }
    for (auto& w : workers) {
        result.failure_total += w.failure_total;
        result.failures.insert(result.failures.end(), w.failures.begin(), w.failures.end());
    }
    trim(result.failures);
    result.truncated = result.failure_total > result.failures.size();
    return result;
}

std::string format_table(const VerifyResult& result) {
    std::ostringstream os;
    const auto& c = result.corpus;
    os << "corpus " << to_string(c.kind);
    if (c.kind == CorpusKind::LineGraphsOf || c.kind == CorpusKind::FactorCriticalFilter) os << "(" << to_string(c.base) << ")";
    os << "  n=" << c.n_min << ".." << c.n_max << "  graphs=" << result.graphs << '\n';
    os << std::left << std::setw(28) << "check" << std::right << std::setw(12) << "passed" << std::setw(10) << "failed"
       << std::setw(12) << "skipped" << '\n';
    for (const auto& [name, t] : result.checks)
        os << std::left << std::setw(28) << name << std::right << std::setw(12) << t.passed << std::setw(10) << t.failed
           << std::setw(12) << t.skipped << '\n';
    for (const auto& f : result.failures)
        os << "FAIL " << f.check << " on " << f.graph << ": expected " << f.expected << ", got " << f.got << '\n';
    if (result.truncated) os << "... " << (result.failure_total - result.failures.size()) << " more failures\n";
    os << (result.ok() ? "OK" : "FAILED") << '\n';
    return os.str();
}

}  // namespace pernull
