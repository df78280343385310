#include "pext/group.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

const pext::ModelParams kModel(1.0, 1.0);

void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = pext::random_group_element(rng, 1.0), b = pext::random_group_element(rng, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pext::compose(a, b, kModel));
}
BENCHMARK(BM_Compose);

void BM_ExpMap(benchmark::State& state) {
  const pext::AlgebraElement x(0.3, -0.7, 0.9, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(pext::exp_map(x, kModel));
}
BENCHMARK(BM_ExpMap);

void BM_LogMap(benchmark::State& state) {
  const auto g = pext::exp_map(pext::AlgebraElement(0.3, -0.7, 0.9, 0.2), kModel);
  for (auto _ : state) benchmark::DoNotOptimize(pext::log_map(g, kModel));
}
BENCHMARK(BM_LogMap);

void BM_CoadjointAction(benchmark::State& state) {
  const pext::GroupElement g{0.4, -0.2, 0.7, 1.1};
  const pext::CoadjointPoint z(0.3, 1.2, -0.5, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(pext::coadjoint_action(g, z, kModel));
}
BENCHMARK(BM_CoadjointAction);

}  // namespace
