#include <benchmark/benchmark.h>

#include "minorsieve/planarity.hpp"

using namespace minorsieve;

namespace {

void BM_PlanarGrid(benchmark::State& state) {
  const Graph g = grid_graph(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_PlanarGrid)->Arg(3)->Arg(5)->Arg(8);

// Nonplanar but under the edge bound, so the full left-right test runs.
void BM_NonplanarSparse(benchmark::State& state) {
  Graph g = complete_bipartite(3, 3);
  for (int i = 0; i < state.range(0); ++i) g = subdivide_edge(g, g.edges().back());
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_NonplanarSparse)->Arg(0)->Arg(10)->Arg(40);

void BM_KSubgraph(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(find_k_subgraph(g));
}
BENCHMARK(BM_KSubgraph);

}  // namespace
