#include <benchmark/benchmark.h>

#include "secgraph/lattice.hpp"

using namespace secgraph::lattice;

namespace {

void BM_LatticeCrossing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto placement = state.range(1) == 0 ? Placement::edge_midpoints : Placement::sites;
  const auto cfg = gen_config(n, 0.45, placement, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(crosses(build_lattice_graph(cfg, Rule::analogy), Direction::horizontal));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_LatticeCrossing)->Args({64, 0})->Args({256, 0})->Args({256, 1});

void BM_LatticeGeometric(benchmark::State& state) {
  const auto cfg = gen_config(256, 0.4, Placement::sites, {2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice_graph(cfg, Rule::geometric_strict, Ball::closed));
}
BENCHMARK(BM_LatticeGeometric);

}  // namespace
