#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "pernull/error.hpp"
#include "pernull/graph.hpp"

namespace pernull {

/// Seedable generator with a portable output sequence: raw MT19937-64 words,
/// mapped to ranges by rejection sampling (no std:: distributions, whose
/// output is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Labeled tree from a uniformly random Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);

/// Random labeled tree plus one uniformly chosen non-edge. Requires n >= 3.
Graph random_unicyclic(std::size_t n, Rng& rng);
Graph random_unicyclic(std::size_t n, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_gnp(std::size_t n, double p, Rng& rng);

/// Random tree with every remaining pair added independently with probability p.
/// Always connected.
Graph random_tree_plus(std::size_t n, double p, Rng& rng);

inline constexpr std::size_t kLabeledEnumerationLimit = 7;
inline constexpr std::size_t kUnlabeledEnumerationLimit = 9;

/// Every labeled graph on n vertices, in ascending order of the edge bitmask
/// (bit i is the i-th pair in graph6 order). 2^(n(n-1)/2) graphs.
void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit,
                              Guard guard = Guard::Enforce);

/// One representative per isomorphism class of connected graphs on n vertices,
/// in canonical-code order. Built by extending the classes on n-1 vertices by a
/// new vertex and deduplicating on a canonical labeling.
void enumerate_connected_unlabeled(std::size_t n, const std::function<void(const Graph&)>& visit,
                                   Guard guard = Guard::Enforce);

/// Canonical relabeling of a graph with at most 11 vertices, by color
/// refinement plus exhaustive individualization. Isomorphic inputs give equal
/// outputs.
Graph canonical_form(const Graph& g);

enum class CorpusKind {
    AllLabeled,
    AllConnectedLabeled,
    ConnectedUnlabeled,
    RandomGnp,
    RandomUnicyclic,
    RandomTreePlus,
    LineGraphsOf,
    FactorCriticalFilter,
};

std::string_view to_string(CorpusKind k);
CorpusKind corpus_kind_from_string(std::string_view s);

/// A reproducible graph stream. Exhaustive kinds cover every n in
/// [n_min, n_max]; random kinds draw `count` graphs with n uniform in that
/// range from Rng(seed). LineGraphsOf and FactorCriticalFilter transform the
/// stream described by `base`.
struct CorpusSpec {
    CorpusKind kind = CorpusKind::AllLabeled;
    CorpusKind base = CorpusKind::AllLabeled;
    std::size_t n_min = 1;
    std::size_t n_max = 5;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    double p = 0.3;
    Guard guard = Guard::Enforce;
};

void for_each_graph(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit);

}  // namespace pernull
