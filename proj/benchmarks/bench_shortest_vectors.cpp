#include <benchmark/benchmark.h>

#include "topocryst/lattice_analysis.hpp"

using namespace topocryst;

static void BM_ShortestVectorsFcc(benchmark::State& state) {
  Lattice l = builtin_lattice("L_D");
  for (auto _ : state) {
    ShortestVectorSet k = shortest_vectors(l);
    benchmark::DoNotOptimize(k.count());
  }
}
BENCHMARK(BM_ShortestVectorsFcc);

static void BM_ShortestVectorsD4(benchmark::State& state) {
  Lattice l = root_lattice('D', 4);
  for (auto _ : state) {
    ShortestVectorSet k = shortest_vectors(l);
    benchmark::DoNotOptimize(k.count());
  }
}
BENCHMARK(BM_ShortestVectorsD4);

static void BM_ShortestVectorsFloat(benchmark::State& state) {
  Lattice l = Lattice::from_float(builtin_lattice("L_DT").basis());
  for (auto _ : state) {
    ShortestVectorSet k = shortest_vectors(l);
    benchmark::DoNotOptimize(k.count());
  }
}
BENCHMARK(BM_ShortestVectorsFloat);

BENCHMARK_MAIN();
