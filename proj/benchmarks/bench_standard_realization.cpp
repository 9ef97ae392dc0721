#include <benchmark/benchmark.h>

#include "topocryst/standard_realization.hpp"

using namespace topocryst;

static void BM_StandardRealizationK4(benchmark::State& state) {
  QuotientGraph g = builtin_block("laves").graph();
  for (auto _ : state) {
    RealizationState s = standard_realization(g);
    benchmark::DoNotOptimize(s.objective);
  }
}
BENCHMARK(BM_StandardRealizationK4);

static void BM_StandardRealizationDipole(benchmark::State& state) {
  QuotientGraph g = builtin_block("diamond").graph();
  for (auto _ : state) {
    RealizationState s = standard_realization(g);
    benchmark::DoNotOptimize(s.objective);
  }
}
BENCHMARK(BM_StandardRealizationDipole);
