#include <benchmark/benchmark.h>

#include "sidlab/percolation.hpp"
#include "sidlab/reflection.hpp"

namespace {

void BM_ReflectionCertificate(benchmark::State& state) {
  const auto ib = sidlab::build_incidence(static_cast<int>(state.range(0)), {2, 3});
  sidlab::SearchOptions opt;
  opt.pool = sidlab::reflection_fold_pool(ib);
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::find_left_cut_percolating(ib.graph.graph(), opt));
}
BENCHMARK(BM_ReflectionCertificate)->Arg(4)->Arg(5);

void BM_VerifyCertificate(benchmark::State& state) {
  const auto ib = sidlab::build_incidence(5, {2, 3});
  sidlab::SearchOptions opt;
  opt.pool = sidlab::reflection_fold_pool(ib);
  const auto cert = *sidlab::find_left_cut_percolating(ib.graph.graph(), opt).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(sidlab::verify_certificate(ib.graph.graph(), cert));
}
BENCHMARK(BM_VerifyCertificate);

}  // namespace
