#pragma once

#include <span>
#include <string>
#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/numerics.hpp"

namespace fracprob {

// (α, n) with α ∈ (0, 1], n ≥ 0.
struct FracOrder {
  double alpha = 1.0;
  int n = 1;

  void validate() const;
  double total() const { return n * alpha; }
  double next_total() const { return (n + 1) * alpha; }
};

struct PowerTerm {
  double coef = 0.0;
  double exp = 0.0;
};

// Σ a_k x^{β_k}, exponents strictly increasing, no zero coefficients.
// The public constructor enforces β > −1; derivative results may leave that
// range and are rejected when another operator is applied to them.
class PowerSum {
 public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms);
  static PowerSum monomial(double coef, double exp);
  // Skips the β > −1 check.
  static PowerSum unchecked(std::vector<PowerTerm> terms);

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  // +∞ for the zero sum.
  double min_exponent() const;
  // Coefficient of x^exp, matching exponents within tol.
  double coefficient_of(double exp, double tol = 1e-12) const;
  std::string describe() const;

  friend PowerSum operator+(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator*(double k, const PowerSum& g);

 private:
  std::vector<PowerTerm> terms_;
};

// Σ a_k x^β_k. At x = 0 returns the constant coefficient and throws
// DomainError if a negative exponent is present.
double evaluate(const PowerSum& g, double x);

// D^{jα} as j literal applications of D^α, each x^β ↦ Γ(1+β)/Γ(1+β−α) x^{β−α}.
// Terms hitting a pole of Γ are dropped. Applying a step to β ≤ −1 throws.
// α > 1 is accepted: the power rule is the same.
PowerSum power_rl_derivative(const PowerSum& g, int j, double alpha);
// I^α: x^β ↦ Γ(1+β)/Γ(1+β+α) x^{β+α}.
PowerSum power_rl_integral(const PowerSum& g, double alpha);
// Caputo D*^α applied i times: constants vanish, x^β ↦ Γ(β+1)/Γ(β+1−α) x^{β−α}
// for β > 0. Each step needs every exponent ≥ 0.
PowerSum power_caputo_derivative(const PowerSum& g, int i, double alpha);

enum class WeylPath { direct, partial_moment };

// I_−^{order} F̄(t). The direct path integrates (x−t)^{order−1} F̄(x); the other
// uses E[(X−t)_+^{order}]/Γ(order+1).
double weyl_integral(const DistributionModel& x, double order, double t,
                     const QuadratureConfig& cfg = {}, WeylPath path = WeylPath::direct);

// Direct path with the raw quadrature result, scaled by 1/Γ(order).
// `reach` is where the tail was cut.
IntegralResult weyl_integral_result(const DistributionModel& x, double order, double t,
                                    const QuadratureConfig& cfg = {});

// I_−^{order} h(t) over [t, upper) for an arbitrary h.
double weyl_integral_fn(const RealFn& h, double order, double t, double upper,
                        std::span<const double> breakpoints, const QuadratureConfig& cfg = {});

// (1/Γ(order)) ∫_0^x (x−t)^{order−1} g(t) dt. g may have an integrable
// singularity at 0.
double rl_integral(const RealFn& g, double order, double x, const QuadratureConfig& cfg = {});

// Central difference of h ↦ I^{1−α}g(x+h), h = 1e-5·max(1, |x|).
// Accuracy is O(h²) plus quadrature noise amplified by 1/h; use the PowerSum
// path for anything that matters.
double rl_derivative_numeric(const RealFn& g, double alpha, double x,
                             const QuadratureConfig& cfg = {});

// E[g(X)] = Σ a_k E[X^{β_k}].
double power_sum_expectation(const PowerSum& g, const DistributionModel& x,
                             Method method = Method::automatic, const QuadratureConfig& cfg = {});

// ∫_0^upper g(t) w(t) dt, with the t^{β_min} factor of g absorbed into the
// quadrature weight. With `absolute`, integrates |g| w instead.
IntegralResult integrate_power_sum(const PowerSum& g, const RealFn& w, double upper,
                                   std::span<const double> breakpoints,
                                   const QuadratureConfig& cfg, bool absolute = false);

}  // namespace fracprob
