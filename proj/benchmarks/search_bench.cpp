#include <benchmark/benchmark.h>

#include "minorsieve/catalog.hpp"
#include "minorsieve/enumerate.hpp"
#include "minorsieve/minimality.hpp"

using namespace minorsieve;

namespace {

void BM_EnumerateAll(benchmark::State& state) {
  EnumFilter f;
  f.order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_graphs(f));
}
BENCHMARK(BM_EnumerateAll)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateOrder9Filtered(benchmark::State& state) {
  EnumFilter f;
  f.order = 9;
  f.connected = true;
  f.min_degree = 2;
  f.planarity = PlanarityFilter::KeepNonplanar;
  for (auto _ : state) benchmark::DoNotOptimize(count_graphs(f));
}
BENCHMARK(BM_EnumerateOrder9Filtered)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SieveAppendix(benchmark::State& state) {
  const auto graphs = appendix_graphs(AppendixList::A1_MMNE_15);
  const Graph& g = graphs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(is_mmne(g));
}
BENCHMARK(BM_SieveAppendix)->Arg(0)->Arg(3)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SearchNE(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_minor_minimal(PropertyId::NE, 1, state.range(0),
                                                  default_search_filter(PropertyId::NE)));
  }
}
BENCHMARK(BM_SearchNE)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
