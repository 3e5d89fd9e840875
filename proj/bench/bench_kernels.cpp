#include <benchmark/benchmark.h>

#include <vector>

#include "fqubit/kernels.hpp"

namespace {

using fqubit::Exec;

std::vector<double> ratio_grid() {
  std::vector<double> r(551);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = 0.02 * static_cast<double>(k);
  return r;
}

fqubit::SystemParams phase_params() {
  fqubit::SystemParams p;
  p.order = 2;
  p.epsilon0 = 2.0;
  p.delta_gap = 1e-2;
  p.amplitude = 1.0;
  p.modulation = 2.5e-4;
  return p;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_ZeroScan(benchmark::State& state) {
  const auto grid = ratio_grid();
  for (auto _ : state) benchmark::DoNotOptimize(fqubit::scan_mean_bessel(1, grid, exec_of(state)));
}

void BM_PhaseTable(benchmark::State& state) {
  const auto p = phase_params();
  for (auto _ : state) benchmark::DoNotOptimize(fqubit::cumulative_envelope_integral(p, 4096, exec_of(state)));
}

void BM_FourierCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fqubit::envelope_fourier_coefficients(2, 1.0, 64, exec_of(state)));
}

void BM_SpectralWeights(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fqubit::spectral_weight_grid(10.0, 100, exec_of(state)));
}

}  // namespace

// Arg 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_ZeroScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PhaseTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FourierCoefficients)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpectralWeights)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
