#include <benchmark/benchmark.h>

#include "topocryst/rings.hpp"

using namespace topocryst;

static void BM_LavesDecagons(benchmark::State& state) {
  BuildingBlock b = builtin_block("laves");
  for (auto _ : state) {
    auto rings = rings_through_vertex(b, 0, 10);
    benchmark::DoNotOptimize(rings.size());
  }
}
BENCHMARK(BM_LavesDecagons);

static void BM_GirthLaves(benchmark::State& state) {
  BuildingBlock b = builtin_block("laves");
  for (auto _ : state) {
    benchmark::DoNotOptimize(girth(b));
  }
}
BENCHMARK(BM_GirthLaves);
