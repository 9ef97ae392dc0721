#include <benchmark/benchmark.h>

#include "topocryst/lattice_analysis.hpp"

using namespace topocryst;

static void BM_PointGroupBcc(benchmark::State& state) {
  Lattice l = builtin_lattice("L_DT");
  for (auto _ : state) {
    PointGroup g = point_group(l);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_PointGroupBcc);

static void BM_ClassifyFcc(benchmark::State& state) {
  Lattice l = builtin_lattice("L_D");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_3d(l));
  }
}
BENCHMARK(BM_ClassifyFcc);
