#include "pernull/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <queue>
#include <sstream>

#include "pernull/error.hpp"

namespace pernull {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::contains(Vertex v) const noexcept {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    auto i = static_cast<std::size_t>(v);
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        throw ArgumentError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
    auto i = static_cast<std::size_t>(v);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void VertexSet::erase(Vertex v) {
    if (!contains(v)) return;
    auto i = static_cast<std::size_t>(v);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

Vertex VertexSet::front() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return -1;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
            throw ArgumentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::size_t twice = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        twice += nbrs.size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= order() || static_cast<std::size_t>(v) >= order())
        return false;
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<std::size_t>(v) > u) out.push_back({static_cast<Vertex>(u), v});
    return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    if (order() > 64) throw ScaleError("neighbor_mask requires at most 64 vertices");
    std::uint64_t mask = 0;
    for (Vertex u : neighbors(v)) mask |= std::uint64_t{1} << u;
    return mask;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kGraph6Bias = 63;

bool is_line_end(char c) { return c == '\n' || c == '\r'; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size() || is_line_end(text[i]))
            throw FormatError("graph6: unexpected end of input at byte " + std::to_string(i), i);
        int b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126)
            throw FormatError("graph6: byte " + std::to_string(i) + " out of range (value " +
                                  std::to_string(b) + ")",
                              i);
        return b - kGraph6Bias;
    };

    std::size_t n = 0;
    if (pos >= text.size() || is_line_end(text[pos])) throw FormatError("graph6: empty input", pos);
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw FormatError("graph6: graphs with more than 258047 vertices are not supported", pos);
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(byte_at(pos + i));
        if (n < 63) throw FormatError("graph6: non-canonical size header", pos);
        pos += 4;
    } else {
        n = static_cast<std::size_t>(byte_at(pos));
        pos += 1;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (bits + 5) / 6;
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            int chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    if (bits % 6 != 0) {
        int last = byte_at(pos + nbytes - 1);
        int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask)
            throw FormatError("graph6: nonzero padding bits in byte " + std::to_string(pos + nbytes - 1),
                              pos + nbytes - 1);
    }
    pos += nbytes;
    while (pos < text.size() && is_line_end(text[pos])) ++pos;
    if (pos != text.size())
        throw FormatError("graph6: trailing garbage at byte " + std::to_string(pos), pos);
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 62) throw ScaleError("to_graph6: graphs with more than 62 vertices are unsupported");
    std::string out;
    out.push_back(static_cast<char>(n + kGraph6Bias));
    int chunk = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kGraph6Bias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Bias));
    return out;
}

// ---------------------------------------------------------------------------
// Edge lists

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
};

long parse_int(const Token& tok) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw FormatError("edge list line " + std::to_string(tok.line) + ": '" + std::string(tok.text) +
                              "' is not an integer",
                          tok.line);
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    // Tokens grouped by line; '#' starts a comment.
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) toks.push_back({line.substr(i, j - i), line_no});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (end == text.size()) break;
        start = end + 1;
    }
    if (lines.empty()) throw FormatError("edge list: missing vertex count", 1);
    if (lines.front().size() != 1)
        throw FormatError("edge list line " + std::to_string(lines.front().front().line) +
                              ": expected a single vertex count",
                          lines.front().front().line);
    long n = parse_int(lines.front().front());
    if (n < 0) throw FormatError("edge list: negative vertex count", lines.front().front().line);

    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& toks = lines[k];
        const auto ln = toks.front().line;
        if (toks.size() != 2)
            throw FormatError("edge list line " + std::to_string(ln) + ": expected two vertex labels", ln);
        long u = parse_int(toks[0]);
        long v = parse_int(toks[1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError("edge list line " + std::to_string(ln) + ": label out of range 0.." +
                                  std::to_string(n - 1),
                              ln);
        if (u == v) throw FormatError("edge list line " + std::to_string(ln) + ": self-loop", ln);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Structure

std::vector<VertexSet> connected_components(const Graph& g) {
    const auto n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order())
        throw ArgumentError("induced_subgraph: vertex set universe does not match graph order");
    InducedSubgraph out;
    out.from_original.assign(g.order(), -1);
    out.to_original = keep.members();
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        out.from_original[static_cast<std::size_t>(out.to_original[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        for (Vertex w : g.neighbors(out.to_original[i])) {
            Vertex j = out.from_original[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
        }
    }
    out.graph = Graph::from_edges(out.to_original.size(), edges);
    return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop) {
    if (drop.universe() != g.order())
        throw ArgumentError("remove_vertices: vertex set universe does not match graph order");
    VertexSet keep(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!drop.contains(static_cast<Vertex>(v))) keep.insert(static_cast<Vertex>(v));
    return induced_subgraph(g, keep);
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    out.edge_of = g.edges();
    // Incident edge indices per vertex; edge_of is already lexicographic.
    std::vector<std::vector<Vertex>> incident(g.order());
    for (std::size_t i = 0; i < out.edge_of.size(); ++i) {
        incident[static_cast<std::size_t>(out.edge_of[i].u)].push_back(static_cast<Vertex>(i));
        incident[static_cast<std::size_t>(out.edge_of[i].v)].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> edges;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) edges.push_back({inc[a], inc[b]});
    out.graph = Graph::from_edges(out.edge_of.size(), edges);
    return out;
}

bool is_unicyclic(const Graph& g) { return g.order() > 0 && g.size() == g.order() && is_connected(g); }

CycleInfo find_unique_cycle(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionError("find_unique_cycle: graph is not unicyclic");
    const auto n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<Vertex>(v));
        if (deg[v] == 1) leaves.push_back(static_cast<Vertex>(v));
    }
    while (!leaves.empty()) {
        Vertex v = leaves.back();
        leaves.pop_back();
        removed[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            if (!removed[ui] && --deg[ui] == 1) leaves.push_back(u);
        }
    }
    // The 2-core is the cycle: walk it from its smallest vertex towards its smaller neighbor.
    Vertex start = -1;
    for (std::size_t v = 0; v < n && start < 0; ++v)
        if (!removed[v]) start = static_cast<Vertex>(v);
    CycleInfo cycle;
    Vertex prev = -1;
    Vertex cur = start;
    do {
        cycle.vertices.push_back(cur);
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur)) {
            if (!removed[static_cast<std::size_t>(u)] && u != prev) {
                next = u;
                break;
            }
        }
        prev = cur;
        cur = next;
    } while (cur != start && cur >= 0);
    return cycle;
}

bool is_two_edge_connected(const Graph& g) {
    const auto n = g.order();
    if (n < 2 || !is_connected(g)) return false;
    // Iterative lowlink DFS; an edge (parent, v) is a bridge iff low[v] > disc[parent].
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<std::size_t> next_child(n, 0);
    int timer = 0;
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto vi = static_cast<std::size_t>(v);
        auto nbrs = g.neighbors(v);
        if (next_child[vi] < nbrs.size()) {
            Vertex u = nbrs[next_child[vi]++];
            auto ui = static_cast<std::size_t>(u);
            if (disc[ui] < 0) {
                parent[ui] = v;
                disc[ui] = low[ui] = timer++;
                stack.push_back(u);
            } else if (u != parent[vi]) {
                low[vi] = std::min(low[vi], disc[ui]);
            }
        } else {
            stack.pop_back();
            if (Vertex p = parent[vi]; p >= 0) {
                auto pi = static_cast<std::size_t>(p);
                low[pi] = std::min(low[pi], low[vi]);
                if (low[vi] > disc[pi]) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Families

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ArgumentError("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
    return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

}  // namespace pernull
