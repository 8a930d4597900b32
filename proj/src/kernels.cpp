#include "fracprob/kernels.hpp"

#include <cmath>
#include <exception>

#include "fracprob/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracprob::kernels {

std::vector<double> sweep_serial(const RealFn& f, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
  return out;
}

std::vector<double> sweep_parallel(const RealFn& f, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(grid[i]);
    } catch (...) {
#pragma omp critical(fracprob_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<double> sweep(const RealFn& f, std::span<const double> grid, Exec exec) {
  return exec == Exec::parallel ? sweep_parallel(f, grid) : sweep_serial(f, grid);
}

MaxDeviation max_abs_deviation_serial(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("max_abs_deviation: size mismatch");
  MaxDeviation best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > best.value) best = {d, i};
  }
  return best;
}

MaxDeviation max_abs_deviation_parallel(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("max_abs_deviation: size mismatch");
  MaxDeviation best;
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel
  {
    MaxDeviation local;
#pragma omp for nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double d = std::abs(a[i] - b[i]);
      if (d > local.value) local = {d, static_cast<std::size_t>(i)};
    }
#pragma omp critical(fracprob_max_deviation)
    if (local.value > best.value || (local.value == best.value && local.index < best.index)) {
      best = local;
    }
  }
  return best;
}

MaxDeviation max_excess(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("max_excess: size mismatch");
  if (a.empty()) return {};
  MaxDeviation best{a[0] - b[0], 0};
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] - b[i] > best.value) best = {a[i] - b[i], i};
  }
  return best;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("logspace: need 0 < lo < hi");
  std::vector<double> out = linspace(std::log(lo), std::log(hi), count);
  if (out.empty()) return out;
  for (double& v : out) v = std::exp(v);
  out.front() = lo;
  if (count > 1) out.back() = hi;
  return out;
}

}  // namespace fracprob::kernels
