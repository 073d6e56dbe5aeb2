// Acceptance run: one line per criterion, nonzero exit if any fails.
//
//   pernull_acceptance [--extended]
//
// --extended raises the exhaustive oracle comparison from n <= 6 to n <= 7.
// PERNULL_THREADS caps the worker count.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pernull/corpus.hpp"
#include "pernull/json.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"
#include "pernull/verify.hpp"

namespace {

using namespace pernull;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::size_t threads() {
    std::size_t t = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PERNULL_THREADS")) t = std::max<std::size_t>(1, std::strtoul(env, nullptr, 10));
    return t;
}

CorpusSpec exhaustive(CorpusKind kind, std::size_t n_min, std::size_t n_max) {
    CorpusSpec spec;
    spec.kind = kind;
    spec.n_min = n_min;
    spec.n_max = n_max;
    return spec;
}

CorpusSpec random(CorpusKind kind, std::size_t n_min, std::size_t n_max, std::size_t count, std::uint64_t seed,
                  double p = 0.3) {
    CorpusSpec spec;
    spec.kind = kind;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.count = count;
    spec.seed = seed;
    spec.p = p;
    return spec;
}

// Accumulates several verification runs; a criterion passes only if every run
// is clean and each named check actually passed on some graph.
class Runs {
public:
    void add(const CorpusSpec& spec, const std::vector<std::string>& checks) {
        const auto r = run_verification(spec, checks, {threads(), 2048});
        graphs_ += r.graphs;
        failures_ += r.failure_total;
        for (const auto& [name, t] : r.checks) {
            passed_ += t.passed;
            if (t.passed == 0) vacuous_.push_back(name + "@" + std::string(to_string(spec.kind)));
        }
        for (const auto& f : r.failures)
            if (examples_.size() < 3) examples_.push_back(f.check + " " + f.graph + " expected " + f.expected + " got " + f.got);
    }

    Verdict verdict() const {
        std::ostringstream os;
        os << graphs_ << " graphs, " << passed_ << " check passes, " << failures_ << " failures";
        for (const auto& v : vacuous_) os << "; no graph exercised " << v;
        for (const auto& e : examples_) os << "\n      " << e;
        return {failures_ == 0 && vacuous_.empty(), os.str()};
    }

private:
    std::size_t graphs_ = 0;
    std::size_t passed_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> vacuous_;
    std::vector<std::string> examples_;
};

Verdict exhaustive_oracle_equivalence(bool extended) {
    Runs runs;
    runs.add(exhaustive(CorpusKind::AllLabeled, 1, extended ? 7 : 6), {"oracle_equivalence"});
    return runs.verdict();
}

Verdict polynomial_cross_check() {
    Runs runs;
    runs.add(exhaustive(CorpusKind::AllLabeled, 1, 6), {"sachs_vs_interpolation"});
    return runs.verdict();
}

Verdict golden_values() {
    std::vector<std::string> bad;
    auto expect_poly = [&](const char* name, const Graph& g, std::vector<long long> coeffs) {
        PermPolynomial want;
        for (auto c : coeffs) want.coeffs.emplace_back(c);
        if (perm_polynomial_sachs(g) != want) bad.push_back(std::string(name) + " sachs");
        if (perm_polynomial_interpolation(g) != want) bad.push_back(std::string(name) + " interpolation");
    };
    expect_poly("C3", cycle_graph(3), {1, 0, 3, -2});
    expect_poly("K2", complete_graph(2), {1, 0, 1});
    expect_poly("P3", path_graph(3), {1, 0, 2, 0});
    for (std::size_t n = 1; n <= 14; ++n) {
        if (per_nullity_structural(Graph(n)).eta_structural != n) bad.push_back("empty_" + std::to_string(n) + " structural");
        if (per_nullity_oracle(Graph(n)) != n) bad.push_back("empty_" + std::to_string(n) + " oracle");
    }
    std::string detail = "x^3+3x-2, x^2+1, x^3+2x, eta(empty_n)=n for n<=14";
    for (const auto& b : bad) detail += "; mismatch " + b;
    return {bad.empty(), detail};
}

Verdict gallai_edmonds_soundness() {
    Runs runs;
    runs.add(exhaustive(CorpusKind::AllConnectedLabeled, 1, 7), {"gallai_edmonds", "f_empty_equivalence"});
    return runs.verdict();
}

Verdict m_statistic_correctness() {
    Runs runs;
    runs.add(exhaustive(CorpusKind::ConnectedUnlabeled, 1, 9), {"m_statistic"});
    runs.add(random(CorpusKind::RandomTreePlus, 1, 14, 10000, 20240601, 0.2), {"m_statistic"});
    return runs.verdict();
}

Verdict zero_nullity() {
    Runs runs;
    runs.add(exhaustive(CorpusKind::AllConnectedLabeled, 2, 7), {"zero_nullity"});
    return runs.verdict();
}

Verdict unicyclic() {
    Runs runs;
    for (std::size_t n = 5; n <= 14; ++n)
        runs.add(random(CorpusKind::RandomUnicyclic, n, n, 1000, 1000 + n),
                 {"unicyclic_sandwich", "unicyclic_thm", "unicyclic_zero"});
    return runs.verdict();
}

Verdict line_graphs() {
    const std::vector<std::string> checks{"line_graph_nullity", "line_graph_perfect", "line_graph_near_perfect",
                                          "line_graph_factor_critical"};
    Runs runs;
    runs.add(exhaustive(CorpusKind::AllConnectedLabeled, 2, 6), checks);
    runs.add(random(CorpusKind::RandomTreePlus, 2, 10, 500, 20240602, 0.25), checks);
    return runs.verdict();
}

Verdict factor_critical() {
    Runs runs;
    auto spec = exhaustive(CorpusKind::FactorCriticalFilter, 3, 7);
    spec.base = CorpusKind::AllConnectedLabeled;
    runs.add(spec, {"factor_critical"});
    return runs.verdict();
}

Verdict determinism() {
    const auto spec = random(CorpusKind::RandomGnp, 1, 12, 3000, 20240603, 0.3);
    const auto first = to_json(run_verification(spec, {}, {1, 256})).dump();
    const auto again = to_json(run_verification(spec, {}, {1, 256})).dump();
    const auto threaded = to_json(run_verification(spec, {}, {std::max<std::size_t>(threads(), 4), 101})).dump();
    const bool same = first == again && first == threaded;
    return {same, std::to_string(first.size()) + "-byte report, repeated and re-threaded: " +
                      (same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
    const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {extended ? "exhaustive oracle equivalence, n <= 7" : "exhaustive oracle equivalence, n <= 6",
         [&] { return exhaustive_oracle_equivalence(extended); }},
        {"Sachs = interpolation on all labeled graphs, n <= 6", polynomial_cross_check},
        {"golden polynomial and empty-graph values", golden_values},
        {"Gallai-Edmonds clauses on connected labeled graphs, n <= 7", gallai_edmonds_soundness},
        {"M(G) vs brute force: connected n <= 9 and 10000 random n <= 14", m_statistic_correctness},
        {"zero-nullity characterization, connected 2 <= n <= 7", zero_nullity},
        {"unicyclic theorems, 1000 random graphs per n in 5..14", unicyclic},
        {"line-graph theorems, connected n <= 6 and 500 random n <= 10", line_graphs},
        {"factor-critical graphs, odd n <= 7", factor_critical},
        {"seeded verification is byte-identical", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (v.pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].name << " -- " << v.detail << " ("
             << took.count() << "s)";
        std::cout << line.str() << std::endl;
        failed += !v.pass;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
