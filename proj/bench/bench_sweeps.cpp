// Serial reference against the OpenMP kernels on the expensive grid sweeps.
// With one hardware thread the two should be within noise of each other.
#include <benchmark/benchmark.h>

#include "fracprob/equilibrium.hpp"
#include "fracprob/kernels.hpp"
#include "fracprob/order_mvt.hpp"

using namespace fracprob;

namespace {

const DistributionModel& weibull() {
  static const DistributionModel w = catalog::weibull(2.0, 1.0);
  return w;
}

void sweep_eq_density(benchmark::State& state, kernels::Exec exec) {
  const EquilibriumView v(weibull(), {0.5, 2});
  const std::vector<double> grid = kernels::linspace(0.0, 3.0, state.range(0));
  const RealFn f = [&](double t) { return eq_density(v, t); };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep(f, grid, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void characterize(benchmark::State& state, kernels::Exec exec) {
  const std::vector<double> grid = characterization_grid(weibull());
  for (auto _ : state) {
    benchmark::DoNotOptimize(characterization_check(weibull(), {0.3, 0.7, 1.0}, {1, 2}, grid, 1e-6, {}, exec));
  }
}

void order_check(benchmark::State& state, kernels::Exec exec) {
  const DistributionModel x = catalog::exponential(1.0), y = catalog::hyperexp2(0.4, 1.0, 3.0);
  const std::vector<double> grid = order_grid(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(check_survival_bounded_order(x, y, 0.6, grid, {}, exec));
}

void max_deviation(benchmark::State& state, bool parallel) {
  const std::vector<double> a = kernels::linspace(0.0, 1.0, state.range(0));
  std::vector<double> b = a;
  b[b.size() / 3] += 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::max_abs_deviation_parallel(a, b)
                                      : kernels::max_abs_deviation_serial(a, b));
  }
}

}  // namespace

BENCHMARK_CAPTURE(sweep_eq_density, serial, kernels::Exec::serial)->Arg(32)->Arg(256);
BENCHMARK_CAPTURE(sweep_eq_density, parallel, kernels::Exec::parallel)->Arg(32)->Arg(256);
BENCHMARK_CAPTURE(characterize, serial, kernels::Exec::serial);
BENCHMARK_CAPTURE(characterize, parallel, kernels::Exec::parallel);
BENCHMARK_CAPTURE(order_check, serial, kernels::Exec::serial);
BENCHMARK_CAPTURE(order_check, parallel, kernels::Exec::parallel);
BENCHMARK_CAPTURE(max_deviation, serial, false)->Arg(1 << 16);
BENCHMARK_CAPTURE(max_deviation, parallel, true)->Arg(1 << 16);

BENCHMARK_MAIN();
