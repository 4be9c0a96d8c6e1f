#include <benchmark/benchmark.h>

#include <limits>

#include "secgraph/percolation.hpp"
#include "secgraph/secrecy_graph.hpp"

using namespace secgraph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void BM_GuardRadii(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const auto w = Window::inflated(side, 5.0);
  const auto goods = sample_ppp(1.0, w, {1, 0});
  const auto eaves = sample_ppp(0.2, w, {1, 0}, Stream::eaves);
  for (auto _ : state) benchmark::DoNotOptimize(guard_radii(goods, eaves, w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(goods.size()));
}
BENCHMARK(BM_GuardRadii)->Arg(50)->Arg(100)->Arg(200);

void BM_BuildDirected(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const double r = state.range(1) == 0 ? kInf : static_cast<double>(state.range(1));
  const auto w = Window::inflated(side, 5.0);
  const auto goods = sample_ppp(1.0, w, {2, 0});
  const auto eaves = sample_ppp(0.2, w, {2, 0}, Stream::eaves);
  for (auto _ : state) benchmark::DoNotOptimize(build_directed(goods, eaves, r));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(goods.size()));
}
BENCHMARK(BM_BuildDirected)->Args({100, 1})->Args({100, 2})->Args({100, 0})->Args({200, 0});

void BM_DegreeSummary(benchmark::State& state) {
  const auto w = Window::inflated(100.0, 5.0);
  const auto g = build_directed(sample_ppp(1.0, w, {3, 0}), sample_ppp(0.2, w, {3, 0}, Stream::eaves), kInf);
  for (auto _ : state) benchmark::DoNotOptimize(degree_summary(g));
}
BENCHMARK(BM_DegreeSummary);

void BM_PercolationSample(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  std::uint64_t run = 0;
  for (auto _ : state) {
    const PercolationSample s(side, 0.3, 5.0, {4, run++});
    benchmark::DoNotOptimize(s.percolates(0.14, kInf));
  }
}
BENCHMARK(BM_PercolationSample)->Arg(100)->Arg(200);

}  // namespace
