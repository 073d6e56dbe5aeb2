#include "pernull/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace pernull {

std::size_t Matching::size() const noexcept {
    std::size_t matched = 0;
    for (Vertex m : mate_)
        if (m != kUnmatched) ++matched;
    return matched / 2;
}

void Matching::match(Vertex u, Vertex v) {
    if (is_matched(u) || is_matched(v) || u == v)
        throw ArgumentError("Matching::match: endpoints must be distinct and exposed");
    mate_[static_cast<std::size_t>(u)] = v;
    mate_[static_cast<std::size_t>(v)] = u;
}

void Matching::unmatch(Vertex v) {
    Vertex m = mate_[static_cast<std::size_t>(v)];
    if (m == kUnmatched) return;
    mate_[static_cast<std::size_t>(v)] = kUnmatched;
    mate_[static_cast<std::size_t>(m)] = kUnmatched;
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < mate_.size(); ++v)
        if (mate_[v] != kUnmatched && static_cast<std::size_t>(mate_[v]) > v)
            out.push_back({static_cast<Vertex>(v), mate_[v]});
    return out;
}

bool Matching::is_valid_for(const Graph& g) const {
    if (mate_.size() != g.order()) return false;
    for (std::size_t v = 0; v < mate_.size(); ++v) {
        Vertex m = mate_[v];
        if (m == kUnmatched) continue;
        if (m < 0 || static_cast<std::size_t>(m) >= mate_.size()) return false;
        if (mate_[static_cast<std::size_t>(m)] != static_cast<Vertex>(v)) return false;
        if (!g.has_edge(static_cast<Vertex>(v), m)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Blossom

namespace {

class Blossom {
public:
    Blossom(const Graph& g, const VertexSet* excluded)
        : g_(g),
          n_(g.order()),
          excluded_(n_, 0),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, 0),
          in_blossom_(n_, 0),
          lca_mark_(n_, 0) {
        if (excluded)
            for (Vertex v : excluded->members()) excluded_[static_cast<std::size_t>(v)] = 1;
    }

    Matching solve() {
        // Greedy start.
        for (std::size_t v = 0; v < n_; ++v) {
            if (excluded_[v] || match_[v] != -1) continue;
            for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
                auto ui = static_cast<std::size_t>(u);
                if (!excluded_[ui] && match_[ui] == -1) {
                    match_[v] = u;
                    match_[ui] = static_cast<Vertex>(v);
                    break;
                }
            }
        }
        for (std::size_t root = 0; root < n_; ++root) {
            if (excluded_[root] || match_[root] != -1) continue;
            Vertex end = find_augmenting_path(static_cast<Vertex>(root));
            while (end != -1) {
                auto ei = static_cast<std::size_t>(end);
                Vertex pv = parent_[ei];
                Vertex next = match_[static_cast<std::size_t>(pv)];
                match_[ei] = pv;
                match_[static_cast<std::size_t>(pv)] = end;
                end = next;
            }
        }
        Matching m(n_);
        for (std::size_t v = 0; v < n_; ++v)
            if (match_[v] != -1 && static_cast<std::size_t>(match_[v]) > v) m.match(static_cast<Vertex>(v), match_[v]);
        return m;
    }

private:
    Vertex lca(Vertex a, Vertex b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            lca_mark_[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (lca_mark_[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            auto mv = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    Vertex find_augmenting_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[static_cast<std::size_t>(root)] = 1;
        queue_.clear();
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex v = queue_[head];
            auto vi = static_cast<std::size_t>(v);
            for (Vertex to : g_.neighbors(v)) {
                auto ti = static_cast<std::size_t>(to);
                if (excluded_[ti] || base_[vi] == base_[ti] || match_[vi] == to) continue;
                if (to == root || (match_[ti] != -1 && parent_[static_cast<std::size_t>(match_[ti])] != -1)) {
                    Vertex cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (in_blossom_[static_cast<std::size_t>(base_[i])]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(static_cast<Vertex>(i));
                            }
                        }
                    }
                } else if (parent_[ti] == -1) {
                    parent_[ti] = v;
                    if (match_[ti] == -1) return to;
                    Vertex next = match_[ti];
                    used_[static_cast<std::size_t>(next)] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<char> excluded_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
    std::vector<char> lca_mark_;
    std::vector<Vertex> queue_;
};

VertexSet single(std::size_t n, Vertex v) {
    VertexSet s(n);
    s.insert(v);
    return s;
}

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g, nullptr).solve(); }

Matching maximum_matching(const Graph& g, const VertexSet& excluded) {
    if (excluded.universe() != g.order())
        throw ArgumentError("maximum_matching: excluded set universe does not match graph order");
    return Blossom(g, &excluded).solve();
}

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_perfect_matching(const Graph& g) { return g.order() % 2 == 0 && 2 * matching_number(g) == g.order(); }

bool has_near_perfect_matching(const Graph& g) {
    return g.order() % 2 == 1 && 2 * matching_number(g) + 1 == g.order();
}

bool is_factor_critical(const Graph& g) {
    const auto n = g.order();
    if (n % 2 == 0) return false;
    for (std::size_t v = 0; v < n; ++v)
        if (2 * maximum_matching(g, single(n, static_cast<Vertex>(v))).size() != n - 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Gallai-Edmonds

namespace {

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    const auto n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s : within.members()) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp(n);
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex u : g.neighbors(v)) {
                auto ui = static_cast<std::size_t>(u);
                if (within.contains(u) && !seen[ui]) {
                    seen[ui] = 1;
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

GEDecomposition gallai_edmonds(const Graph& g) {
    const auto n = g.order();
    GEDecomposition dec{VertexSet(n), VertexSet(n), VertexSet(n), {}, {}, {}, 0};
    const Matching base = maximum_matching(g);
    dec.nu = base.size();
    for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        // An exposed vertex is missed by `base` itself; otherwise ask nu(g - v).
        if (!base.is_matched(vx) || maximum_matching(g, single(n, vx)).size() == dec.nu) dec.d.insert(vx);
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        if (dec.d.contains(vx)) continue;
        bool touches_d = std::any_of(g.neighbors(vx).begin(), g.neighbors(vx).end(),
                                     [&](Vertex u) { return dec.d.contains(u); });
        (touches_d ? dec.b : dec.c).insert(vx);
    }
    dec.d_components = components_within(g, dec.d);
    for (std::size_t i = 0; i < dec.d_components.size(); ++i) {
        auto order = dec.d_components[i].size();
        if (order == 1) dec.singletons.push_back(i);
        else if (order >= 3) dec.factor_components.push_back(i);
    }
    return dec;
}

// ---------------------------------------------------------------------------
// M(G)

namespace {

void require_consistent(const Graph& g, const GEDecomposition& dec) {
    const auto n = g.order();
    auto fail = [](const std::string& why) { throw ArgumentError("m_statistic: decomposition inconsistent with graph: " + why); };
    if (dec.d.universe() != n || dec.b.universe() != n || dec.c.universe() != n) fail("universe size");
    for (std::size_t v = 0; v < n; ++v) {
        const auto vx = static_cast<Vertex>(v);
        int owners = dec.d.contains(vx) + dec.b.contains(vx) + dec.c.contains(vx);
        if (owners != 1) fail("D, B, C do not partition the vertex set");
        bool touches_d = std::any_of(g.neighbors(vx).begin(), g.neighbors(vx).end(),
                                     [&](Vertex u) { return dec.d.contains(u); });
        if (!dec.d.contains(vx) && touches_d != dec.b.contains(vx)) fail("B is not the neighborhood of D");
    }
    if (components_within(g, dec.d) != dec.d_components) fail("component list does not match g[D]");
    for (auto i : dec.singletons)
        if (i >= dec.d_components.size() || dec.d_components[i].size() != 1) fail("bad singleton index");
    for (auto i : dec.factor_components)
        if (i >= dec.d_components.size() || dec.d_components[i].size() < 3) fail("bad component index");
}

// Kuhn's augmenting path search on the B-vs-component bipartite graph.
bool augment(std::size_t left, const std::vector<std::vector<std::size_t>>& adj, std::vector<long>& right_mate,
             std::vector<char>& visited) {
    for (auto r : adj[left]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (right_mate[r] < 0 || augment(static_cast<std::size_t>(right_mate[r]), adj, right_mate, visited)) {
            right_mate[r] = static_cast<long>(left);
            return true;
        }
    }
    return false;
}

}  // namespace

MStatistic m_statistic(const Graph& g, const GEDecomposition& dec) {
    require_consistent(g, dec);
    if (!is_connected(g)) throw PreconditionError("m_statistic: graph must be connected");

    MStatistic out;
    if (dec.d.empty()) return out;  // perfect matching

    std::vector<long> component_of(g.order(), -1);
    for (std::size_t i = 0; i < dec.d_components.size(); ++i)
        for (Vertex v : dec.d_components[i].members()) component_of[static_cast<std::size_t>(v)] = static_cast<long>(i);
    std::vector<char> is_singleton(dec.d_components.size(), 0);
    for (auto i : dec.singletons) is_singleton[i] = 1;

    const auto b_vertices = dec.b.members();
    std::vector<std::vector<std::size_t>> adj_all(b_vertices.size()), adj_single(b_vertices.size());
    for (std::size_t i = 0; i < b_vertices.size(); ++i) {
        for (Vertex u : g.neighbors(b_vertices[i])) {
            long c = component_of[static_cast<std::size_t>(u)];
            if (c < 0) continue;
            auto ci = static_cast<std::size_t>(c);
            if (std::find(adj_all[i].begin(), adj_all[i].end(), ci) == adj_all[i].end()) adj_all[i].push_back(ci);
        }
        std::sort(adj_all[i].begin(), adj_all[i].end());
        for (auto c : adj_all[i])
            if (is_singleton[c]) adj_single[i].push_back(c);
    }

    std::vector<long> right_mate(dec.d_components.size(), -1);
    std::vector<char> visited(dec.d_components.size());
    for (std::size_t i = 0; i < b_vertices.size(); ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(i, adj_single, right_mate, visited);
    }
    for (std::size_t i = 0; i < b_vertices.size(); ++i) {
        bool matched = std::find(right_mate.begin(), right_mate.end(), static_cast<long>(i)) != right_mate.end();
        if (matched) continue;
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(i, adj_all, right_mate, visited))
            throw InvariantViolation("m_statistic: B cannot be matched into distinct components of g[D]");
    }

    std::size_t factor_matched = 0;
    for (std::size_t c = 0; c < right_mate.size(); ++c) {
        if (right_mate[c] < 0) continue;
        out.witness.emplace_back(b_vertices[static_cast<std::size_t>(right_mate[c])], c);
        if (is_singleton[c]) ++out.saturated_singletons;
        else if (dec.d_components[c].size() >= 3) ++factor_matched;
    }
    std::sort(out.witness.begin(), out.witness.end());
    out.value = dec.factor_components.size() - factor_matched;
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force references

namespace {

using Mask = std::uint32_t;

struct MatchingEnumerator {
    std::vector<Mask> nbr;
    Matching current;
    std::size_t target = 0;
    std::size_t best = 0;
    const std::function<void(const Matching&)>* visit = nullptr;

    explicit MatchingEnumerator(const Graph& g) : nbr(g.order()), current(g.order()) {
        for (std::size_t v = 0; v < g.order(); ++v)
            for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nbr[v] |= Mask{1} << u;
    }

    void find_best(Mask open, std::size_t size) {
        best = std::max(best, size);
        if (open == 0 || size + static_cast<std::size_t>(std::popcount(open)) / 2 <= best) return;
        const int v = std::countr_zero(open);
        const Mask rest = open & ~(Mask{1} << v);
        for (Mask cand = nbr[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1)
            find_best(rest & ~(Mask{1} << std::countr_zero(cand)), size + 1);
        find_best(rest, size);
    }

    void enumerate(Mask open, std::size_t size) {
        if (size + static_cast<std::size_t>(std::popcount(open)) / 2 < target) return;
        if (open == 0) {
            (*visit)(current);
            return;
        }
        const int v = std::countr_zero(open);
        const Mask rest = open & ~(Mask{1} << v);
        for (Mask cand = nbr[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1) {
            const int u = std::countr_zero(cand);
            current.match(v, u);
            enumerate(rest & ~(Mask{1} << u), size + 1);
            current.unmatch(v);
        }
        enumerate(rest, size);
    }

};

void require_enumerable(const Graph& g, Guard guard, const char* who) {
    if (g.order() > 31 || (guard == Guard::Enforce && g.order() > kMatchingEnumerationLimit))
        throw ScaleError(std::string(who) + ": " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                         std::to_string(kMatchingEnumerationLimit));
}

}  // namespace

void for_each_maximum_matching(const Graph& g, const std::function<void(const Matching&)>& visit, Guard guard) {
    require_enumerable(g, guard, "for_each_maximum_matching");
    MatchingEnumerator e(g);
    const Mask all = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
    e.find_best(all, 0);
    e.target = e.best;
    e.visit = &visit;
    e.enumerate(all, 0);
}

VertexSet exposable_vertices_by_enumeration(const Graph& g, Guard guard) {
    VertexSet out(g.order());
    for_each_maximum_matching(
        g,
        [&](const Matching& m) {
            for (std::size_t v = 0; v < m.order(); ++v)
                if (!m.is_matched(static_cast<Vertex>(v))) out.insert(static_cast<Vertex>(v));
        },
        guard);
    return out;
}

std::size_t m_statistic_oracle(const Graph& g, Guard guard) {
    require_enumerable(g, guard, "m_statistic_oracle");
    const auto n = g.order();
    std::set<Mask> exposed_sets;
    for_each_maximum_matching(
        g,
        [&](const Matching& m) {
            Mask exposed = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (!m.is_matched(static_cast<Vertex>(v))) exposed |= Mask{1} << v;
            exposed_sets.insert(exposed);
        },
        guard);

    Mask d = 0;
    for (Mask s : exposed_sets) d |= s;
    // Components of g[D] straight from the masks.
    std::vector<Mask> nbr(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nbr[v] |= Mask{1} << u;
    Mask singletons = 0;
    std::vector<Mask> large;
    for (Mask left = d; left;) {
        Mask comp = left & (~left + 1);
        for (Mask frontier = comp; frontier;) {
            Mask grow = 0;
            for (Mask f = frontier; f; f &= f - 1) grow |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
            grow &= d & ~comp;
            comp |= grow;
            frontier = grow;
        }
        left &= ~comp;
        if (std::popcount(comp) == 1) singletons |= comp;
        else if (std::popcount(comp) >= 3) large.push_back(comp);
    }

    int best_covered = -1;
    std::set<std::size_t> counts;
    for (Mask exposed : exposed_sets) {
        int covered = std::popcount(singletons & ~exposed);
        std::size_t count = 0;
        for (Mask comp : large)
            if (std::popcount(comp & exposed) == 1) ++count;
        if (covered > best_covered) {
            best_covered = covered;
            counts.clear();
        }
        if (covered == best_covered) counts.insert(count);
    }
    if (counts.empty()) return 0;
    if (counts.size() != 1)
        throw InvariantViolation("m_statistic_oracle: M(G) differs between maximum matchings that cover the same "
                                 "number of singleton components (graph6 " +
                                 (n <= 62 ? to_graph6(g) : std::string("?")) + ")");
    return *counts.begin();
}

}  // namespace pernull
