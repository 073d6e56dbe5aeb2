#include <benchmark/benchmark.h>

#include "pernull/corpus.hpp"
#include "pernull/matching.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"

namespace {

using namespace pernull;

IntMatrix random_01(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.bernoulli(0.5) ? 1 : 0;
    return m;
}

void BM_Ryser(benchmark::State& state) {
    const auto m = random_01(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Ryser)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_Blossom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const auto g = random_gnp(n, 3.0 / static_cast<double>(n), rng);
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Blossom)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond)->Complexity();

void BM_GallaiEdmonds(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const auto g = random_gnp(n, 2.0 / static_cast<double>(n), rng);
    for (auto _ : state) benchmark::DoNotOptimize(gallai_edmonds(g));
}
BENCHMARK(BM_GallaiEdmonds)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_StructuralNullity(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    const auto g = random_tree_plus(n, 1.0 / static_cast<double>(n), rng);
    for (auto _ : state) benchmark::DoNotOptimize(per_nullity_structural(g));
}
BENCHMARK(BM_StructuralNullity)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_SachsPolynomial(benchmark::State& state) {
    Rng rng(5);
    const auto g = random_gnp(static_cast<std::size_t>(state.range(0)), 0.3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(perm_polynomial_sachs(g));
}
BENCHMARK(BM_SachsPolynomial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Interpolation(benchmark::State& state) {
    Rng rng(5);
    const auto g = random_gnp(static_cast<std::size_t>(state.range(0)), 0.3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(perm_polynomial_interpolation(g));
}
BENCHMARK(BM_Interpolation)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

void BM_MaxSachsSubgraph(benchmark::State& state) {
    Rng rng(6);
    const auto g = random_gnp(static_cast<std::size_t>(state.range(0)), 0.3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(max_sachs_subgraph(g));
}
BENCHMARK(BM_MaxSachsSubgraph)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_MStatisticOracle(benchmark::State& state) {
    Rng rng(7);
    const auto g = random_tree_plus(static_cast<std::size_t>(state.range(0)), 0.2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m_statistic_oracle(g));
}
BENCHMARK(BM_MStatisticOracle)->DenseRange(8, 14, 3)->Unit(benchmark::kMicrosecond);

void BM_ConnectedUnlabeled(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_connected_unlabeled(n, [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ConnectedUnlabeled)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
