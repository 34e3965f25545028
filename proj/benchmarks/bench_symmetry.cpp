#include <benchmark/benchmark.h>

#include "sidlab/families.hpp"
#include "sidlab/folds.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"

namespace {

void BM_AutomorphismsIncidence(benchmark::State& state) {
  const auto g = sidlab::build_incidence(static_cast<int>(state.range(0)), {2}).graph.graph();
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::automorphisms(g));
}
BENCHMARK(BM_AutomorphismsIncidence)->Arg(4)->Arg(5);

void BM_EnumerateFolds(benchmark::State& state) {
  const auto g = sidlab::build_incidence(static_cast<int>(state.range(0)), {2}).graph.graph();
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::enumerate_folds(g));
}
BENCHMARK(BM_EnumerateFolds)->Arg(4)->Arg(5);

}  // namespace
