#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sigmalab/propagator/kernels.hpp"
#include "sigmalab/propagator/radial.hpp"
#include "sigmalab/semilinear/system.hpp"
#include "sigmalab/spectral/fft.hpp"
#include "sigmalab/spectral/field.hpp"
#include "sigmalab/spectral/grid.hpp"

using namespace sigmalab;

namespace {

// delta index selects the regime: 0 -> delta < sigma/2, 1 -> delta = sigma/2, 2 -> delta > sigma/2.
model::PhysicalParams regime(int64_t which) {
  const double delta[] = {0.25, 0.5, 0.75};
  return {1.0, delta[which], 1, 2.0, 2.0};
}

void BM_RealKernels(benchmark::State& state) {
  const auto p = regime(state.range(0));
  double rho = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator::real_kernels(3.0, rho, p));
    rho = rho > 50.0 ? 0.01 : rho * 1.01;
  }
}
BENCHMARK(BM_RealKernels)->DenseRange(0, 2);

void BM_KernelTable(benchmark::State& state) {
  const auto g = spectral::make_grid(1, state.range(0), 32.0);
  const auto p = regime(0);
  for (auto _ : state) benchmark::DoNotOptimize(propagator::kernel_table(*g, 0.05, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KernelTable)->RangeMultiplier(4)->Range(256, 16384);

void BM_Fft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int points = static_cast<int>(state.range(1));
  const auto g = spectral::make_grid(n, points, 8.0);
  std::vector<std::complex<double>> in(g->size(), {1.0, 0.5}), out(g->size());
  for (auto _ : state) {
    spectral::forward(*g, in.data(), out.data());
    spectral::inverse(*g, out.data(), in.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g->size()));
}
BENCHMARK(BM_Fft)->Args({1, 1024})->Args({1, 16384})->Args({2, 128})->Args({3, 32});

void BM_SemilinearStep(benchmark::State& state) {
  const auto g = spectral::make_grid(1, state.range(0), 32.0);
  const auto p = regime(0);
  const auto bump = spectral::SpectralField::from_function(
      g, [](const double* x) { return 0.1 * std::exp(-x[0] * x[0]); });
  semilinear::SystemState s(g);
  s.u = bump;
  s.v = bump;
  const auto tab = propagator::kernel_table(*g, 0.01, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(semilinear::step(s, tab, semilinear::CouplingKind::UU, p));
  }
}
BENCHMARK(BM_SemilinearStep)->RangeMultiplier(4)->Range(256, 4096);

void BM_RadialNorm(benchmark::State& state) {
  const auto p = regime(state.range(0));
  const propagator::RadialProfile data;
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator::radial_norm(data, t, 0, 0.5, 3, p));
    t = t > 1e4 ? 1.0 : t * 1.7;
  }
}
BENCHMARK(BM_RadialNorm)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
