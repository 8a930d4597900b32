#pragma once

// Grid sweeps. Every evaluation point is independent, so the OpenMP kernels
// produce bitwise the same output as the serial references below them.

#include <cstddef>
#include <span>
#include <vector>

#include "fracprob/numerics.hpp"

namespace fracprob::kernels {

enum class Exec { serial, parallel };

std::vector<double> sweep_serial(const RealFn& f, std::span<const double> grid);
std::vector<double> sweep_parallel(const RealFn& f, std::span<const double> grid);
std::vector<double> sweep(const RealFn& f, std::span<const double> grid,
                          Exec exec = Exec::parallel);

// Largest |a[i] − b[i]|; ties resolve to the lowest index.
struct MaxDeviation {
  double value = 0.0;
  std::size_t index = 0;
};

MaxDeviation max_abs_deviation_serial(std::span<const double> a, std::span<const double> b);
MaxDeviation max_abs_deviation_parallel(std::span<const double> a, std::span<const double> b);

// Largest a[i] − b[i] (signed).
MaxDeviation max_excess(std::span<const double> a, std::span<const double> b);

int thread_count();

// Grids
std::vector<double> linspace(double lo, double hi, std::size_t count);
std::vector<double> logspace(double lo, double hi, std::size_t count);

}  // namespace fracprob::kernels
