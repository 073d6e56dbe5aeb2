#include "pernull/json.hpp"

namespace pernull {

namespace {

std::string graph_label(const Graph& g) {
    if (g.order() <= 62) return to_graph6(g);
    return {};
}

}  // namespace

Json to_json(const VertexSet& s) {
    Json out = Json::array();
    for (Vertex v : s.members()) out.push_back(v);
    return out;
}

Json to_json(const NullityReport& r, const Graph& g) {
    Json out;
    out["graph6"] = graph_label(g);
    out["n"] = r.n;
    out["nu"] = r.nu;
    out["m_stat"] = r.m_stat;
    out["eta_structural"] = r.eta_structural;
    if (r.eta_oracle) out["eta_oracle"] = *r.eta_oracle;
    out["case_fired"] = to_string(r.case_fired());
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json item;
        item["vertices"] = c.vertices;
        item["n"] = c.n;
        item["nu"] = c.nu;
        item["m_stat"] = c.m_stat;
        item["eta"] = c.eta;
        item["case_fired"] = to_string(c.case_fired);
        comps.push_back(std::move(item));
    }
    out["components"] = std::move(comps);
    return out;
}

Json to_json(const GEDecomposition& dec) {
    Json out;
    out["D"] = to_json(dec.d);
    out["B"] = to_json(dec.b);
    out["C"] = to_json(dec.c);
    Json comps = Json::array();
    for (const auto& c : dec.d_components) comps.push_back(to_json(c));
    out["d_components"] = std::move(comps);
    out["singletons"] = dec.singletons;
    out["factor_components"] = dec.factor_components;
    out["nu"] = dec.nu;
    const auto n = dec.d.universe();
    out["nu_from_partition"] = Json((static_cast<double>(n) - static_cast<double>(dec.d_components.size()) +
                                     static_cast<double>(dec.b.size())) / 2.0);
    return out;
}

Json to_json(const PermPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    Json out;
    out["coeffs"] = std::move(coeffs);
    out["zero_root_multiplicity"] = p.zero_root_multiplicity();
    return out;
}

Json to_json(const CorpusSpec& spec) {
    Json out;
    out["kind"] = to_string(spec.kind);
    if (spec.kind == CorpusKind::LineGraphsOf || spec.kind == CorpusKind::FactorCriticalFilter)
        out["base"] = to_string(spec.base);
    out["n_min"] = spec.n_min;
    out["n_max"] = spec.n_max;
    out["count"] = spec.count;
    out["seed"] = std::to_string(spec.seed);
    out["p"] = spec.p;
    return out;
}

Json to_json(const VerifyResult& r) {
    Json out;
    out["corpus"] = to_json(r.corpus);
    out["graphs"] = r.graphs;
    Json checks;
    for (const auto& [name, t] : r.checks) {
        Json item;
        item["passed"] = t.passed;
        item["failed"] = t.failed;
        item["skipped"] = t.skipped;
        checks[name] = std::move(item);
    }
    out["checks"] = checks.is_null() ? Json::object() : std::move(checks);
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json item;
        item["graph6"] = f.graph;
        item["check"] = f.check;
        item["expected"] = f.expected;
        item["got"] = f.got;
        failures.push_back(std::move(item));
    }
    out["failures"] = std::move(failures);
    out["failure_total"] = r.failure_total;
    out["truncated"] = r.truncated;
    out["ok"] = r.ok();
    return out;
}

}  // namespace pernull
