#include <benchmark/benchmark.h>

#include "sidlab/density.hpp"
#include "sidlab/families.hpp"
#include "sidlab/reflection.hpp"

namespace {

void BM_DensityIncidence(benchmark::State& state) {
  const auto g = sidlab::build_incidence(static_cast<int>(state.range(0)), {2}).graph.graph();
  const auto w = sidlab::random_step_bigraphon(static_cast<int>(state.range(1)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::density(g, w));
}
BENCHMARK(BM_DensityIncidence)->Args({4, 4})->Args({5, 4})->Args({6, 3});

void BM_DensityBook(benchmark::State& state) {
  const auto g = sidlab::book(static_cast<int>(state.range(0)));
  const auto w = sidlab::random_step_bigraphon(4, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::density(g, w));
}
BENCHMARK(BM_DensityBook)->Arg(2)->Arg(8)->Arg(32);

void BM_Sinkhorn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = sidlab::random_step_bigraphon(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::sinkhorn_biregularize(w));
}
BENCHMARK(BM_Sinkhorn)->Arg(4)->Arg(16);

}  // namespace
