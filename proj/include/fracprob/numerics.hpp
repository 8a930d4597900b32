#pragma once

#include <functional>
#include <limits>
#include <span>

namespace fracprob {

using RealFn = std::function<double(double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 60;          // bisection levels below the starting panel
  double tail_epsilon = 1e-14; // semi-infinite truncation threshold

  void validate() const;

  // Tolerances divided by `factor`; used for integrands that are themselves
  // computed by quadrature so that inner noise stays below the outer target.
  QuadratureConfig tightened(double factor) const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  // Largest abscissa, in the original variable, that the integral reached.
  // For semi-infinite integrals this is the truncation point T.
  double reach = 0.0;
};

// Returns r.value, or throws ConvergenceError naming `what`.
double checked(const IntegralResult& r, const char* what);

double gamma(double x);
double log_gamma(double x);  // x > 0
double reciprocal_gamma(double x);
double beta(double a, double b);

// Adaptive Gauss-Kronrod (7/15) with global bisection on [a, b].
IntegralResult integrate(const RealFn& f, double a, double b,
                         const QuadratureConfig& cfg = {});

// ∫_a^∞ f. Panels [a, a+1], [a+1, a+2], [a+2, a+4], ... are added until a
// doubling increment falls below tail_epsilon·(1+|value|).
IntegralResult integrate_semi_infinite(const RealFn& f, double a,
                                       const QuadratureConfig& cfg = {});

// ∫_t^upper (x−t)^{p−1} f(x) dx, p > 0. For p < 1 the endpoint singularity is
// removed with u = (x−t)^p.
IntegralResult integrate_singular_power(const RealFn& f, double t, double p,
                                        const QuadratureConfig& cfg = {},
                                        double upper = kInfinity);

// Same weighted integral, additionally split at `breakpoints` (kinks or jumps
// of f). Points outside (t, upper) are ignored.
IntegralResult integrate_weighted(const RealFn& f, double t, double p,
                                  double upper,
                                  std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg = {});

}  // namespace fracprob
