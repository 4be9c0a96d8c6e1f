#include <benchmark/benchmark.h>

#include "secgraph/analytics.hpp"

using namespace secgraph::analytics;

namespace {

void BM_OutDegreePmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(out_degree_pmf({0.2, 2.0}, n));
}
BENCHMARK(BM_OutDegreePmf)->Arg(0)->Arg(10)->Arg(100)->Arg(1000);

void BM_UpperGamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regularized_upper_gamma_int(n, 0.5 * n));
}
BENCHMARK(BM_UpperGamma)->Arg(10)->Arg(1000);

}  // namespace
