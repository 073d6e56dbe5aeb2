#include "pernull/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "pernull/matching.hpp"

namespace pernull {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ArgumentError("Rng::below: bound must be positive");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

Graph random_tree(std::size_t n, Rng& rng) {
    if (n <= 1) return Graph(n);
    if (n == 2) {
        const Edge e{0, 1};
        return Graph::from_edges(2, std::span(&e, 1));
    }
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(static_cast<Vertex>(v));
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({std::min(leaf, c), std::max(leaf, c)});
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.push_back({std::min(a, b), std::max(a, b)});
    return Graph::from_edges(n, edges);
}

namespace {

std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return out;
}

}  // namespace

Graph random_unicyclic(std::size_t n, Rng& rng) {
    if (n < 3) throw ArgumentError("random_unicyclic: need at least 3 vertices");
    const Graph tree = random_tree(n, rng);
    auto edges = tree.edges();
    const auto candidates = non_edges(tree);
    edges.push_back(candidates[rng.below(candidates.size())]);
    return Graph::from_edges(n, edges);
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_unicyclic(n, rng);
}

Graph random_gnp(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (rng.bernoulli(p)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph::from_edges(n, edges);
}

Graph random_tree_plus(std::size_t n, double p, Rng& rng) {
    const Graph tree = random_tree(n, rng);
    auto edges = tree.edges();
    for (const auto& e : non_edges(tree))
        if (rng.bernoulli(p)) edges.push_back(e);
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Exhaustive labeled enumeration

void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit, Guard guard) {
    if (n > 11 || (guard == Guard::Enforce && n > kLabeledEnumerationLimit))
        throw ScaleError("enumerate_labeled_graphs: n = " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(kLabeledEnumerationLimit));
    std::vector<Edge> pairs;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1U) edges.push_back(pairs[b]);
        visit(Graph::from_edges(n, edges));
    }
}

// ---------------------------------------------------------------------------
// Canonical labeling

namespace {

constexpr std::size_t kCanonicalLimit = 11;  // n(n-1)/2 code bits must fit in 64

using Rows = std::array<std::uint16_t, kCanonicalLimit>;

class Canonizer {
public:
    Canonizer(const Rows& rows, std::size_t n) : rows_(rows), n_(n) {}

    std::uint64_t run() {
        std::vector<int> color(n_, 0);
        refine(color);
        std::vector<int> path;
        search(color, path);
        return best_code_;
    }

    const std::vector<int>& best_labeling() const { return best_pos_; }

private:
    // Splits color classes by (own color, neighbor count per color) until stable.
    // Colors stay ranks 0..k-1 and a class only ever splits into consecutive ranks.
    void refine(std::vector<int>& color) const {
        std::size_t classes = static_cast<std::size_t>(*std::max_element(color.begin(), color.end())) + 1;
        std::vector<std::vector<int>> sig(n_);
        for (;;) {
            for (std::size_t v = 0; v < n_; ++v) {
                sig[v].assign(classes + 1, 0);
                sig[v][0] = color[v];
                for (std::uint16_t r = rows_[v]; r; r &= static_cast<std::uint16_t>(r - 1))
                    ++sig[v][static_cast<std::size_t>(color[static_cast<std::size_t>(std::countr_zero(r))]) + 1];
            }
            std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t v = 0; v < n_; ++v)
                color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            if (distinct.size() == classes) return;
            classes = distinct.size();
        }
    }

    std::uint64_t code_of(const std::vector<int>& pos) const {
        std::vector<int> at(n_);
        for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(pos[v])] = static_cast<int>(v);
        std::uint64_t code = 0;
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i)
                code = (code << 1) | ((rows_[static_cast<std::size_t>(at[i])] >> at[j]) & 1U);
        return code;
    }

    void search(const std::vector<int>& color, std::vector<int>& path) {
        const int classes = *std::max_element(color.begin(), color.end()) + 1;
        if (static_cast<std::size_t>(classes) == n_) {
            const std::uint64_t code = code_of(color);
            if (!have_best_ || code < best_code_) {
                best_code_ = code;
                best_pos_ = color;
                have_best_ = true;
            } else if (code == best_code_) {
                // gamma = best^-1 o this maps vertices onto vertices: an automorphism.
                std::vector<int> at(n_);
                for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(best_pos_[v])] = static_cast<int>(v);
                std::vector<int> gamma(n_);
                for (std::size_t v = 0; v < n_; ++v) gamma[v] = at[static_cast<std::size_t>(color[v])];
                automorphisms_.push_back(std::move(gamma));
            }
            return;
        }
        // First non-singleton class.
        std::vector<int> size(static_cast<std::size_t>(classes), 0);
        for (int c : color) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1) ++target;

        std::vector<int> tried;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color[v] != target) continue;
            if (equivalent_to_tried(static_cast<int>(v), tried, path)) continue;
            tried.push_back(static_cast<int>(v));
            std::vector<int> next(color);
            for (std::size_t u = 0; u < n_; ++u)
                if (next[u] > target || (next[u] == target && u != v)) ++next[u];
            refine(next);
            path.push_back(static_cast<int>(v));
            search(next, path);
            path.pop_back();
        }
    }

    // v lies in the orbit of an already explored vertex under the known
    // automorphisms that fix the current path pointwise.
    bool equivalent_to_tried(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
        if (tried.empty()) return false;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes) continue;
            for (std::size_t u = 0; u < n_; ++u) parent[static_cast<std::size_t>(find(static_cast<int>(u)))] = find(gamma[u]);
        }
        const int root = find(v);
        return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
    }

    const Rows& rows_;
    std::size_t n_;
    std::uint64_t best_code_ = 0;
    bool have_best_ = false;
    std::vector<int> best_pos_;
    std::vector<std::vector<int>> automorphisms_;
};

Rows rows_of(const Graph& g) {
    Rows rows{};
    for (std::size_t v = 0; v < g.order(); ++v)
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) rows[v] |= static_cast<std::uint16_t>(1U << u);
    return rows;
}

Graph graph_from_code(std::uint64_t code, std::size_t n) {
    std::vector<Edge> edges;
    int bit = static_cast<int>(n * (n - 1) / 2) - 1;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1U) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph::from_edges(n, edges);
}

std::uint64_t canonical_code(const Rows& rows, std::size_t n) { return Canonizer(rows, n).run(); }

}  // namespace

Graph canonical_form(const Graph& g) {
    const auto n = g.order();
    if (n > kCanonicalLimit) throw ScaleError("canonical_form: at most 11 vertices supported");
    if (n <= 1) return g;
    return graph_from_code(canonical_code(rows_of(g), n), n);
}

void enumerate_connected_unlabeled(std::size_t n, const std::function<void(const Graph&)>& visit, Guard guard) {
    if (n > kCanonicalLimit || (guard == Guard::Enforce && n > kUnlabeledEnumerationLimit))
        throw ScaleError("enumerate_connected_unlabeled: n = " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(kUnlabeledEnumerationLimit));
    if (n == 0) return;
    // Every connected graph on k vertices arises from a connected graph on k-1
    // vertices by adding a vertex: delete a leaf of a spanning tree.
    std::vector<std::uint64_t> level{0};  // K1
    for (std::size_t k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t code : level) {
            const Graph parent = graph_from_code(code, k - 1);
            Rows rows = rows_of(parent);
            for (std::uint32_t subset = 1; subset < (1U << (k - 1)); ++subset) {
                Rows ext = rows;
                ext[k - 1] = static_cast<std::uint16_t>(subset);
                for (std::size_t v = 0; v + 1 < k; ++v)
                    if ((subset >> v) & 1U) ext[v] = static_cast<std::uint16_t>(ext[v] | (1U << (k - 1)));
                seen.insert(canonical_code(ext, k));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    for (std::uint64_t code : level) visit(graph_from_code(code, n));
}

// ---------------------------------------------------------------------------
// Corpus streams

std::string_view to_string(CorpusKind k) {
    switch (k) {
        case CorpusKind::AllLabeled: return "ALL_LABELED";
        case CorpusKind::AllConnectedLabeled: return "ALL_CONNECTED_LABELED";
        case CorpusKind::ConnectedUnlabeled: return "CONNECTED_UNLABELED";
        case CorpusKind::RandomGnp: return "RANDOM_GNP";
        case CorpusKind::RandomUnicyclic: return "RANDOM_UNICYCLIC";
        case CorpusKind::RandomTreePlus: return "RANDOM_TREE_PLUS";
        case CorpusKind::LineGraphsOf: return "LINE_GRAPHS_OF";
        case CorpusKind::FactorCriticalFilter: return "FACTOR_CRITICAL_FILTER";
    }
    return "?";
}

CorpusKind corpus_kind_from_string(std::string_view s) {
    for (auto k : {CorpusKind::AllLabeled, CorpusKind::AllConnectedLabeled, CorpusKind::ConnectedUnlabeled,
                   CorpusKind::RandomGnp, CorpusKind::RandomUnicyclic, CorpusKind::RandomTreePlus,
                   CorpusKind::LineGraphsOf, CorpusKind::FactorCriticalFilter})
        if (to_string(k) == s) return k;
    throw ArgumentError("unknown corpus kind '" + std::string(s) + "'");
}

namespace {

void stream_source(const CorpusSpec& spec, CorpusKind kind, const std::function<void(const Graph&)>& visit) {
    if (spec.n_min > spec.n_max) throw ArgumentError("corpus: n_min exceeds n_max");
    switch (kind) {
        case CorpusKind::AllLabeled:
            for (auto n = spec.n_min; n <= spec.n_max; ++n) enumerate_labeled_graphs(n, visit, spec.guard);
            return;
        case CorpusKind::AllConnectedLabeled:
            for (auto n = spec.n_min; n <= spec.n_max; ++n)
                enumerate_labeled_graphs(
                    n,
                    [&](const Graph& g) {
                        if (is_connected(g)) visit(g);
                    },
                    spec.guard);
            return;
        case CorpusKind::ConnectedUnlabeled:
            for (auto n = spec.n_min; n <= spec.n_max; ++n) enumerate_connected_unlabeled(n, visit, spec.guard);
            return;
        case CorpusKind::RandomGnp:
        case CorpusKind::RandomUnicyclic:
        case CorpusKind::RandomTreePlus: {
            if (kind == CorpusKind::RandomUnicyclic && spec.n_min < 3)
                throw ArgumentError("corpus: unicyclic graphs need n >= 3");
            Rng rng(spec.seed);
            const auto span = spec.n_max - spec.n_min + 1;
            for (std::size_t i = 0; i < spec.count; ++i) {
                const auto n = spec.n_min + static_cast<std::size_t>(rng.below(span));
                if (kind == CorpusKind::RandomGnp) visit(random_gnp(n, spec.p, rng));
                else if (kind == CorpusKind::RandomUnicyclic) visit(random_unicyclic(n, rng));
                else visit(random_tree_plus(n, spec.p, rng));
            }
            return;
        }
        case CorpusKind::LineGraphsOf:
        case CorpusKind::FactorCriticalFilter:
            throw ArgumentError("corpus: transform kinds cannot be used as a base stream");
    }
}

}  // namespace

void for_each_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit) {
    switch (spec.kind) {
        case CorpusKind::LineGraphsOf:
            stream_source(spec, spec.base, [&](const Graph& g) { visit(line_graph(g).graph); });
            return;
        case CorpusKind::FactorCriticalFilter:
            stream_source(spec, spec.base, [&](const Graph& g) {
                if (is_factor_critical(g)) visit(g);
            });
            return;
        default:
            stream_source(spec, spec.kind, visit);
    }
}

}  // namespace pernull
