#include <benchmark/benchmark.h>

#include "slicekit/appendix_checks.hpp"

using namespace slicekit;

static void BM_SweepWeightRepB2(benchmark::State& state) {
  auto datum = RootDatum::build("B2");
  for (auto _ : state) {
    RepOracle oracle(datum);
    benchmark::DoNotOptimize(sweep_weight_rep(oracle, 3).cases_checked);
  }
}
BENCHMARK(BM_SweepWeightRepB2);

static void BM_SweepPairingOrbitA3(benchmark::State& state) {
  auto datum = RootDatum::build("A3");
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_pairing_orbit_equiv(datum, 2).cases_checked);
}
BENCHMARK(BM_SweepPairingOrbitA3);
