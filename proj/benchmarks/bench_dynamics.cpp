#include "pext/dynamics.hpp"

#include <benchmark/benchmark.h>

namespace {

const pext::ModelParams kModel(1.0, 1.0);
const pext::ClassicalState kState{0.0, 0.3, 0.0, 1.0};

void BM_ClosedForm(benchmark::State& state) {
  const auto packet = pext::SpectralAmplitude::gaussian(0.5, 0.4);
  double E = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pext::c_closed_form(kState, kModel, E, 2.0, packet));
    E += 1e-6;
  }
}
BENCHMARK(BM_ClosedForm);

void BM_OraclePropagate(benchmark::State& state) {
  const auto packet = pext::SpectralAmplitude::gaussian(0.5, 0.4);
  const auto grid = pext::packet_grid(kState, kModel, packet, 2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pext::oracle_propagate(kState, kModel, packet, 2.0, grid));
}
BENCHMARK(BM_OraclePropagate)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
