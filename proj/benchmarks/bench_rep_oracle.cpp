#include <benchmark/benchmark.h>

#include "slicekit/rep_oracle.hpp"

using namespace slicekit;

static void BM_WeightDiagramG2(benchmark::State& state) {
  auto datum = RootDatum::build("G2");
  Coweight la({2, 2});
  for (auto _ : state) {
    RepOracle oracle(datum);  // fresh oracle so the cache never helps
    benchmark::DoNotOptimize(oracle.weights_of(la)->dimension());
  }
}
BENCHMARK(BM_WeightDiagramG2);

static void BM_WeightDiagramD4(benchmark::State& state) {
  auto datum = RootDatum::build("D4");
  Coweight la({1, 1, 0, 1});
  for (auto _ : state) {
    RepOracle oracle(datum);
    benchmark::DoNotOptimize(oracle.weights_of(la)->dimension());
  }
}
BENCHMARK(BM_WeightDiagramD4);

static void BM_WeylOrbitD4(benchmark::State& state) {
  auto datum = RootDatum::build("D4");
  Coweight regular = datum.two_rho();
  for (auto _ : state) benchmark::DoNotOptimize(datum.weyl_orbit(regular).size());
}
BENCHMARK(BM_WeylOrbitD4);
