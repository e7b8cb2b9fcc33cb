#include <antichain/multilinear.hpp>
#include <antichain/search.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace antichain;

static void BM_ExtremalDiameter(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(extremal_diameter(n, n / 2).optimum);
}
BENCHMARK(BM_ExtremalDiameter)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_MaxCliqueWorkers(benchmark::State &state) {
  const auto g = build_graph(
      7, nullptr, [](std::uint64_t a, std::uint64_t b) { return popcount(a ^ b) <= 3; }, "d3", true);
  SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  opts.symmetry = SymmetryMode::off;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_clique(g, opts).optimum);
}
BENCHMARK(BM_MaxCliqueWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ProductReduced(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<LinearForm> forms;
  for (int j = 0; j < 4; ++j)
    forms.push_back({SetWord(n, rng() & ground_mask(n)), static_cast<long>(j)});
  for (auto _ : state)
    benchmark::DoNotOptimize(product_reduced(n, forms).terms().size());
}
BENCHMARK(BM_ProductReduced)->RangeMultiplier(2)->Range(4, 16);

static void BM_SystemRank(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<Poly> polys;
  for (int i = 0; i < 2 * n; ++i) {
    const LinearForm f[2] = {{SetWord(n, rng() & ground_mask(n)), 0}, {SetWord(n, rng() & ground_mask(n)), 1}};
    polys.push_back(product_reduced(n, f));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(system_rank(polys, 2));
}
BENCHMARK(BM_SystemRank)->DenseRange(4, 10, 2);
BENCHMARK_MAIN();
