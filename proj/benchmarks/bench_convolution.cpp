#include <benchmark/benchmark.h>

#include "slicekit/convolution.hpp"

using namespace slicekit;

static void BM_FixedPointsGl2N8(benchmark::State& state) {
  auto datum = RootDatum::build("GL2");
  RepOracle oracle(datum);
  Coweight w1({1, 0}), alpha({1, -1});
  auto c = make_convolution(datum, std::vector<Coweight>(8, w1), w1 * 8 - alpha * 4);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(oracle, c).size());
}
BENCHMARK(BM_FixedPointsGl2N8);

static void BM_PoincareGl3N4(benchmark::State& state) {
  auto datum = RootDatum::build("GL3");
  RepOracle oracle(datum);
  Coweight w1({1, 0, 0}), w2({1, 1, 0});
  auto c = make_convolution(datum, {w1, w2, w1, w2}, Coweight({2, 2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(oracle, c).evaluate_at_one());
}
BENCHMARK(BM_PoincareGl3N4);
