#include <benchmark/benchmark.h>

#include "halg/scalar.hpp"

static void ScalarConstantMul(benchmark::State& state) {
  auto a = halg::Scalar::zeta(12, 5);
  auto b = halg::Scalar::zeta(12, 7) + halg::Scalar::from_int(12, 2);
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(ScalarConstantMul);

BENCHMARK_MAIN();
