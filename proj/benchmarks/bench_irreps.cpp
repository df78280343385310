#include "pext/irreps.hpp"
#include "pext/quadrature.hpp"

#include <benchmark/benchmark.h>

namespace {

const pext::ModelParams kModel(1.0, 1.0);

void BM_RepApplyNorm(benchmark::State& state) {
  const auto rep = pext::RepParams::case_a(1.0, -1.0, kModel);
  const auto f = pext::hermite_probes()[5];
  const pext::GroupElement g{0.4, -0.2, 0.7, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(pext::norm(pext::rep_apply(rep, g, f)));
}
BENCHMARK(BM_RepApplyNorm);

void BM_InnerProduct(benchmark::State& state) {
  const auto probes = pext::hermite_probes();
  for (auto _ : state) benchmark::DoNotOptimize(pext::inner_product(probes[2], probes[5]));
}
BENCHMARK(BM_InnerProduct);

void BM_Homomorphism(benchmark::State& state) {
  const auto rep = pext::RepParams::case_a(1.0, -1.0, kModel);
  const auto probes = pext::hermite_probes();
  const pext::GroupElement g1{0.4, -0.2, 0.7, 1.1}, g2{-0.3, 0.5, -0.4, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(pext::verify_homomorphism(rep, g2, g1, probes));
}
BENCHMARK(BM_Homomorphism)->Unit(benchmark::kMillisecond);

}  // namespace
