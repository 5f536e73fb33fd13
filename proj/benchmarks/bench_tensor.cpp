#include "fixtures.hpp"
#include "hbtensor/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hbtensor;

namespace {

HbGraph sample(std::size_t n, std::size_t p, unsigned mult) {
  std::mt19937_64 rng(n * 1000 + p);
  return testing::random_hbgraph(rng, n, p, mult);
}

void BM_EAdjacencyTensor(benchmark::State& state) {
  const auto approach = static_cast<Approach>(state.range(0));
  const auto h = sample(static_cast<std::size_t>(state.range(1)), 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(e_adjacency_tensor(h, approach));
  state.SetLabel(std::string(to_string(approach)));
}
BENCHMARK(BM_EAdjacencyTensor)->ArgsProduct({{0, 1, 2}, {16, 128}});

void BM_RowSums(benchmark::State& state) {
  const auto h = sample(static_cast<std::size_t>(state.range(0)), 64, 3);
  const auto t = e_adjacency_tensor(h, Approach::silo).tensor;
  for (auto _ : state) {
    for (std::size_t i = 0; i < t.dim(); ++i) benchmark::DoNotOptimize(row_sum(t, i));
  }
}
BENCHMARK(BM_RowSums)->Arg(16)->Arg(128);

void BM_EdgeDistribution(benchmark::State& state) {
  const auto h = sample(64, 64, 3);
  const auto [t, trace] = e_adjacency_tensor(h, static_cast<Approach>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_distribution(t, trace, h.size()));
}
BENCHMARK(BM_EdgeDistribution)->DenseRange(0, 2);

void BM_PowerIteration(benchmark::State& state) {
  const auto h = sample(static_cast<std::size_t>(state.range(0)), 32, 2);
  const auto t = e_adjacency_tensor(h, Approach::layered).tensor;
  PowerIterationOptions opts;
  opts.max_iterations = 200;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_max_eigenvalue(t, opts));
}
BENCHMARK(BM_PowerIteration)->Arg(8)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
