#include <benchmark/benchmark.h>

#include "litf/litf.hpp"

namespace {

void BM_EnumerateUpSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(litf::enumerate_up_sets(n));
}
BENCHMARK(BM_EnumerateUpSets)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_EnumerateElements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(litf::enumerate_elements(n));
}
BENCHMARK(BM_EnumerateElements)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MaterializeFreeLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(litf::materialize_free_distributive_lattice(n));
}
BENCHMARK(BM_MaterializeFreeLattice)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BetaBarCuts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const litf::LValuedFunction beta = litf::beta_bar(n);
  for (auto _ : state) benchmark::DoNotOptimize(litf::cut_collection(beta));
}
BENCHMARK(BM_BetaBarCuts)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
