#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pernull/corpus.hpp"
#include "pernull/error.hpp"
#include "pernull/graph.hpp"
#include "pernull/json.hpp"
#include "pernull/matching.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"
#include "pernull/verify.hpp"

namespace {

using namespace pernull;

enum ExitCode { kOk = 0, kFailures = 1, kUsage = 2, kScale = 3, kInvariant = 4 };

enum class Format { Text, Json, Jsonl };

struct Options {
    Format format = Format::Text;
    bool override_guards = false;
    Guard guard() const { return override_guards ? Guard::Override : Guard::Enforce; }
};

struct InputOptions {
    std::vector<std::string> inline_graphs;
    std::string file;
    std::string edges;
};

struct NamedGraph {
    std::string label;
    Graph graph;
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    return slurp(in);
}

std::vector<NamedGraph> parse_graph6_lines(const std::string& text, const std::string& source) {
    std::vector<NamedGraph> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back({source + ":" + std::to_string(number), parse_graph6(line)});
        } catch (const FormatError& e) {
            throw FormatError(source + " line " + std::to_string(number) + ": " + e.what(), number);
        }
    }
    return out;
}

std::vector<NamedGraph> load_inputs(const InputOptions& in) {
    const int sources = !in.inline_graphs.empty() + !in.file.empty() + !in.edges.empty();
    if (sources > 1) throw ArgumentError("give exactly one of: inline graph6, --file, --edges");
    if (!in.edges.empty()) {
        try {
            return {{in.edges, parse_edge_list(read_file(in.edges))}};
        } catch (const FormatError& e) {
            throw FormatError(in.edges + " line " + std::to_string(e.position()) + ": " + e.what(), e.position());
        }
    }
    if (!in.file.empty()) return parse_graph6_lines(read_file(in.file), in.file);
    if (!in.inline_graphs.empty()) {
        std::vector<NamedGraph> out;
        for (std::size_t i = 0; i < in.inline_graphs.size(); ++i) {
            try {
                out.push_back({in.inline_graphs[i], parse_graph6(in.inline_graphs[i])});
            } catch (const FormatError& e) {
                throw FormatError("argument " + std::to_string(i + 1) + ": " + e.what(), i + 1);
            }
        }
        return out;
    }
    return parse_graph6_lines(slurp(std::cin), "stdin");
}

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    for (Vertex v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

std::string label_of(const Graph& g) { return g.order() <= 62 ? to_graph6(g) : "n=" + std::to_string(g.order()); }

void emit(const Options& opt, const std::vector<Json>& records, const std::vector<std::string>& texts) {
    switch (opt.format) {
        case Format::Text:
            for (const auto& t : texts) std::cout << t << '\n';
            break;
        case Format::Jsonl:
            for (const auto& r : records) std::cout << r.dump() << '\n';
            break;
        case Format::Json: {
            Json all = Json::array();
            for (const auto& r : records) all.push_back(r);
            std::cout << all.dump(2) << '\n';
            break;
        }
    }
}

int cmd_nullity(const Options& opt, const InputOptions& in, bool oracle) {
    std::vector<Json> records;
    std::vector<std::string> texts;
    for (const auto& item : load_inputs(in)) {
        auto report = per_nullity_structural(item.graph);
        if (oracle) report.eta_oracle = per_nullity_oracle(item.graph, opt.guard());
        records.push_back(to_json(report, item.graph));
        std::ostringstream os;
        os << label_of(item.graph) << "  n=" << report.n << " nu=" << report.nu << " M=" << report.m_stat
           << " eta=" << report.eta_structural;
        if (report.eta_oracle) os << " oracle=" << *report.eta_oracle;
        os << " case=" << to_string(report.case_fired());
        texts.push_back(os.str());
    }
    emit(opt, records, texts);
    return kOk;
}

int cmd_decompose(const Options& opt, const InputOptions& in) {
    std::vector<Json> records;
    std::vector<std::string> texts;
    for (const auto& item : load_inputs(in)) {
        const auto dec = gallai_edmonds(item.graph);
        Json record;
        record["graph6"] = label_of(item.graph);
        record.update(to_json(dec));
        records.push_back(std::move(record));

        std::ostringstream os;
        os << label_of(item.graph) << '\n';
        os << "  D = " << set_text(dec.d) << "\n  B = " << set_text(dec.b) << "\n  C = " << set_text(dec.c) << '\n';
        os << "  components of G[D]:";
        for (const auto& c : dec.d_components) os << ' ' << set_text(c);
        os << "\n  D0' (singletons):";
        for (auto i : dec.singletons) os << ' ' << set_text(dec.d_components[i]);
        os << "\n  F (order >= 3):";
        for (auto i : dec.factor_components) os << ' ' << set_text(dec.d_components[i]);
        const auto n = item.graph.order();
        os << "\n  nu = " << dec.nu << "  (|V| - c(D) + |B|)/2 = "
           << (static_cast<double>(n) - static_cast<double>(dec.d_components.size()) + static_cast<double>(dec.b.size())) / 2;
        texts.push_back(os.str());
    }
    emit(opt, records, texts);
    return kOk;
}

int cmd_polynomial(const Options& opt, const InputOptions& in, const std::string& method) {
    std::vector<Json> records;
    std::vector<std::string> texts;
    for (const auto& item : load_inputs(in)) {
        PermPolynomial poly;
        if (method == "sachs") {
            poly = perm_polynomial_sachs(item.graph, opt.guard());
        } else if (method == "interp") {
            poly = perm_polynomial_interpolation(item.graph, opt.guard());
        } else {
            poly = perm_polynomial_sachs(item.graph, opt.guard());
            const auto other = perm_polynomial_interpolation(item.graph, opt.guard());
            if (poly != other)
                throw InvariantViolation("polynomial methods disagree on " + label_of(item.graph) + ": sachs " +
                                         poly.to_string() + ", interpolation " + other.to_string());
        }
        Json record;
        record["graph6"] = label_of(item.graph);
        record["method"] = method;
        record.update(to_json(poly));
        records.push_back(std::move(record));
        std::string line;
        for (const auto& c : poly.coeffs) line += (line.empty() ? "" : " ") + c.str();
        texts.push_back(line);
    }
    emit(opt, records, texts);
    return kOk;
}

struct VerifyFlags {
    std::size_t all_labeled = 0;
    std::size_t all_connected = 0;
    std::size_t connected_unlabeled = 0;
    std::size_t gnp = 0;
    std::size_t unicyclic = 0;
    std::size_t tree_plus = 0;
    std::size_t n = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    double p = 0.3;
    std::uint64_t seed = 1;
    bool line_graphs = false;
    bool factor_critical = false;
    std::string checks;
    bool list = false;
};

std::size_t thread_count() {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PERNULL_THREADS")) {
        try {
            const auto cap = std::stoul(env);
            if (cap > 0) threads = std::min<std::size_t>(threads, cap);
        } catch (const std::exception&) {
            throw ArgumentError(std::string("PERNULL_THREADS: not a number: ") + env);
        }
    }
    return threads;
}

std::vector<std::string> split_checks(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    for (const auto& name : out) {
        bool known = false;
        for (const auto& info : available_checks()) known = known || info.name == name;
        if (!known) throw ArgumentError("unknown check '" + name + "'");
    }
    return out;
}

int cmd_verify(const Options& opt, const VerifyFlags& f) {
    if (f.list) {
        for (const auto& info : available_checks()) std::cout << info.name << "  " << info.description << '\n';
        return kOk;
    }
    const auto checks = split_checks(f.checks);

    CorpusSpec spec;
    spec.guard = opt.guard();
    spec.seed = f.seed;
    spec.p = f.p;
    const int kinds = (f.all_labeled > 0) + (f.all_connected > 0) + (f.connected_unlabeled > 0) + (f.gnp > 0) +
                      (f.unicyclic > 0) + (f.tree_plus > 0);
    if (kinds > 1) throw ArgumentError("give at most one corpus flag");
    std::size_t exhaustive_max = 5;
    bool random = false;
    if (f.all_connected > 0) {
        spec.kind = CorpusKind::AllConnectedLabeled;
        exhaustive_max = f.all_connected;
    } else if (f.connected_unlabeled > 0) {
        spec.kind = CorpusKind::ConnectedUnlabeled;
        exhaustive_max = f.connected_unlabeled;
    } else if (f.gnp > 0 || f.unicyclic > 0 || f.tree_plus > 0) {
        random = true;
        spec.kind = f.gnp > 0 ? CorpusKind::RandomGnp : f.unicyclic > 0 ? CorpusKind::RandomUnicyclic
                                                                        : CorpusKind::RandomTreePlus;
        spec.count = f.gnp + f.unicyclic + f.tree_plus;
    } else if (f.all_labeled > 0) {
        exhaustive_max = f.all_labeled;
    }
    if (random) {
        spec.n_min = f.n > 0 ? f.n : (f.n_min > 0 ? f.n_min : (spec.kind == CorpusKind::RandomUnicyclic ? 3 : 1));
        spec.n_max = f.n > 0 ? f.n : (f.n_max > 0 ? f.n_max : 10);
    } else {
        spec.n_min = f.n_min > 0 ? f.n_min : 1;
        spec.n_max = f.n_max > 0 ? f.n_max : exhaustive_max;
        if (f.n > 0) spec.n_min = spec.n_max = f.n;
    }
    if (f.line_graphs && f.factor_critical) throw ArgumentError("--line-graphs and --factor-critical are exclusive");
    if (f.line_graphs || f.factor_critical) {
        spec.base = spec.kind;
        spec.kind = f.line_graphs ? CorpusKind::LineGraphsOf : CorpusKind::FactorCriticalFilter;
    }

    VerifyOptions options;
    options.threads = thread_count();
    const auto result = run_verification(spec, checks, options);
    switch (opt.format) {
        case Format::Text: std::cout << format_table(result); break;
        case Format::Json: std::cout << to_json(result).dump(2) << '\n'; break;
        case Format::Jsonl: std::cout << to_json(result).dump() << '\n'; break;
    }
    return result.ok() ? kOk : kFailures;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("graph6", in.inline_graphs, "graph6 strings (default: read graph6 lines from stdin)");
    cmd->add_option("--file", in.file, "file of graph6 lines");
    cmd->add_option("--edges", in.edges, "edge-list file: vertex count, then one 'u v' pair per line");
}

int run(int argc, char** argv) {
    CLI::App app{"Permanental nullity of graphs from matching structure"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "jsonl"}))
        ->capture_default_str();
    app.add_flag("--unsafe-override-guards", opt.override_guards, "run exponential algorithms past their size guards");

    InputOptions nullity_in, decompose_in, poly_in;
    bool oracle = false;
    auto* nullity = app.add_subcommand("nullity", "structural per-nullity");
    add_input_options(nullity, nullity_in);
    nullity->add_flag("--oracle", oracle, "also compute the nullity from the permanental polynomial");

    auto* decompose = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
    add_input_options(decompose, decompose_in);

    std::string method = "sachs";
    auto* polynomial = app.add_subcommand("polynomial", "coefficients b_0..b_n of per(xI - A)");
    add_input_options(polynomial, poly_in);
    polynomial->add_option("--method", method, "sachs, interp, or both")
        ->check(CLI::IsMember({"sachs", "interp", "both"}))
        ->capture_default_str();

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "check the theorems over a graph corpus");
    verify->add_option("--all-labeled", vf.all_labeled, "every labeled graph on 1..N vertices (default N = 5)");
    verify->add_option("--all-connected", vf.all_connected, "every connected labeled graph on 1..N vertices");
    verify->add_option("--connected-unlabeled", vf.connected_unlabeled,
                       "one connected graph per isomorphism class on 1..N vertices");
    verify->add_option("--gnp", vf.gnp, "COUNT random G(n, p) graphs");
    verify->add_option("--unicyclic", vf.unicyclic, "COUNT random unicyclic graphs");
    verify->add_option("--tree-plus", vf.tree_plus, "COUNT random connected graphs (tree plus G(n, p) edges)");
    verify->add_option("--n", vf.n, "fix the vertex count");
    verify->add_option("--n-min", vf.n_min, "smallest vertex count");
    verify->add_option("--n-max", vf.n_max, "largest vertex count");
    verify->add_option("--p", vf.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    verify->add_option("--seed", vf.seed, "random seed");
    verify->add_flag("--line-graphs", vf.line_graphs, "verify the line graphs of the corpus");
    verify->add_flag("--factor-critical", vf.factor_critical, "keep only factor-critical graphs");
    verify->add_option("--checks", vf.checks, "comma-separated check names (default: all)");
    verify->add_flag("--list-checks", vf.list, "print the available checks and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    opt.format = format == "json" ? Format::Json : format == "jsonl" ? Format::Jsonl : Format::Text;

    if (*nullity) return cmd_nullity(opt, nullity_in, oracle);
    if (*decompose) return cmd_decompose(opt, decompose_in);
    if (*polynomial) return cmd_polynomial(opt, poly_in, method);
    return cmd_verify(opt, vf);
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    try {
        return run(argc, argv);
    } catch (const pernull::ScaleError& e) {
        std::cerr << "pernull: " << e.what() << " (use --unsafe-override-guards)\n";
        return kScale;
    } catch (const pernull::InvariantViolation& e) {
        std::cerr << "pernull: invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const pernull::Error& e) {
        std::cerr << "pernull: " << e.what() << '\n';
        return kUsage;
    }
}
