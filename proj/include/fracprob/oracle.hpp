#pragma once

// Reference computations that avoid the fractional machinery they are used to
// check: classical calculus, nested quadrature and closed forms taken straight
// from the worked examples.

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"

namespace fracprob::oracle {

struct ClassicalTaylor {
  double series = 0.0;     // Σ_{k≤n} g^{(k)}(0)/k! E[X^k]
  double remainder = 0.0;  // E[(1/n!) ∫_0^X (X−t)^n g^{(n+1)}(t) dt]
};

// Polynomial g only (nonnegative integer exponents). The remainder is a
// quadrature over x of an inner quadrature over t.
ClassicalTaylor classical_taylor(const PowerSum& g, const DistributionModel& x, int n,
                                 const QuadratureConfig& cfg = {});

// Z_α density for deductibles r < s on a 2-phase hyperexponential severity:
// Σ p_i λ_i^{1−α} e^{−λ_i z} Δ_i / Σ p_i λ_i^{−α} Δ_i with Δ_i = e^{−λ_i r} − e^{−λ_i s}.
double hyperexp_deductible_z_density(double p, double rate1, double rate2, double r, double s,
                                     double alpha, double z);

// ∫_0^b t^r f(t) dt for a density f given pointwise.
double density_moment(const RealFn& density, double r, double upper,
                      std::span<const double> breakpoints, const QuadratureConfig& cfg = {});

}  // namespace fracprob::oracle
