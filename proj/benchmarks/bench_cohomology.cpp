#include "pext/cohomology.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BettiNumbers(benchmark::State& state) {
  const auto sc = pext::catalog::extended_poincare();
  for (auto _ : state) benchmark::DoNotOptimize(pext::betti_numbers(sc));
}
BENCHMARK(BM_BettiNumbers);

void BM_BettiAbelian(benchmark::State& state) {
  const auto sc = pext::catalog::abelian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pext::betti_numbers(sc));
}
BENCHMARK(BM_BettiAbelian)->DenseRange(3, 7, 2);

}  // namespace
