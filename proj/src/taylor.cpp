#include "fracprob/taylor.hpp"

#include <cmath>

#include "fracprob/equilibrium.hpp"
#include "fracprob/errors.hpp"

namespace fracprob {

namespace {

constexpr double kExpTol = 1e-12;

void check_taylor_args(double alpha, int n) {
  FracOrder{alpha, n}.validate();
}

struct Remainder {
  double value = 0.0;
  double absolute = 0.0;
};

// E[X^m]/Γ(m+1) · ∫ h(t) f_{n+1}(t) dt with m = (n+1)α. The |h| integral runs
// first so that a divergent expectation is reported instead of a residual.
Remainder remainder(const PowerSum& h, const DistributionModel& x, double alpha, int n,
                    const QuadratureConfig& cfg) {
  if (h.empty()) return {};
  const EquilibriumView view(x, {alpha, n + 1}, cfg);
  const double m = view.order().total();
  const RealFn density = [&view](double t) { return eq_density(view, t); };
  const QuadratureConfig inner = cfg.tightened(10.0);
  const double scale = view.norm() * reciprocal_gamma(m + 1.0);
  Remainder r;
  try {
    const IntegralResult a =
        integrate_power_sum(h, density, x.support_upper(), x.breakpoints(), inner, true);
    if (!a.converged || !std::isfinite(a.value)) throw ConvergenceError("not converged");
    r.absolute = scale * a.value;
  } catch (const Error& e) {
    throw DomainError("remainder hypothesis fails: E|D g(X_alpha^(n+1))| is not finite (" +
                      std::string(e.what()) + ")");
  }
  r.value = scale * checked(integrate_power_sum(h, density, x.support_upper(), x.breakpoints(), inner),
                            "taylor remainder");
  return r;
}

}  // namespace

double rl_taylor_coefficient(const PowerSum& g, int j, double alpha) {
  const PowerSum h = power_rl_derivative(g, j, alpha);
  const double edge = alpha - 1.0;
  for (const PowerTerm& t : h.terms()) {
    if (t.exp < edge - kExpTol) {
      throw DivergenceError("rl_taylor_coefficient: D^{" + std::to_string(j) +
                            " alpha} g contains x^" + std::to_string(t.exp) +
                            ", below x^(alpha-1); the limit at 0 diverges");
    }
  }
  return gamma(alpha) * h.coefficient_of(edge, kExpTol);
}

bool rl_taylor_admissible(const PowerSum& g, double alpha, int n) {
  for (int j = 0; j <= n; ++j) {
    const PowerSum d = power_rl_derivative(g, j, alpha);
    for (const PowerTerm& t : d.terms()) {
      if (t.exp < alpha - 1.0 - kExpTol) return false;
    }
  }
  return true;
}

bool caputo_taylor_admissible(const PowerSum& g, double alpha, int n) {
  try {
    power_caputo_derivative(g, n + 1, alpha);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

TaylorReport rl_taylor_expectation(const PowerSum& g, const DistributionModel& x, double alpha,
                                   int n, const QuadratureConfig& cfg) {
  check_taylor_args(alpha, n);
  TaylorReport rep;
  rep.lhs = power_sum_expectation(g, x, Method::automatic, cfg);
  double series = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double c = rl_taylor_coefficient(g, j, alpha);
    const double s = (j + 1) * alpha;
    double term = 0.0;
    if (c != 0.0) {
      term = c * reciprocal_gamma(s) * fractional_moment(x, s - 1.0, Method::automatic, cfg);
    }
    rep.coefficients.push_back(c);
    rep.terms.push_back(term);
    series += term;
  }
  const Remainder r = remainder(power_rl_derivative(g, n + 1, alpha), x, alpha, n, cfg);
  rep.remainder = r.value;
  rep.remainder_abs = r.absolute;
  rep.residual = rep.lhs - series - rep.remainder;
  return rep;
}

TaylorReport caputo_taylor_expectation(const PowerSum& g, const DistributionModel& x,
                                       double alpha, int n, const QuadratureConfig& cfg) {
  check_taylor_args(alpha, n);
  for (const PowerTerm& t : g.terms()) {
    if (t.exp < 0.0) {
      throw DomainError("caputo_taylor_expectation: exponent " + std::to_string(t.exp) +
                        " is negative");
    }
  }
  // Validates every step up to n+1 before any moment is computed.
  const PowerSum top = power_caputo_derivative(g, n + 1, alpha);
  TaylorReport rep;
  rep.lhs = power_sum_expectation(g, x, Method::automatic, cfg);
  double series = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double at_zero = power_caputo_derivative(g, i, alpha).coefficient_of(0.0, kExpTol);
    double term = 0.0;
    if (at_zero != 0.0) {
      term = at_zero * reciprocal_gamma(i * alpha + 1.0) *
             fractional_moment(x, i * alpha, Method::automatic, cfg);
    }
    rep.coefficients.push_back(at_zero);
    rep.terms.push_back(term);
    series += term;
  }
  const Remainder r = remainder(top, x, alpha, n, cfg);
  rep.remainder = r.value;
  rep.remainder_abs = r.absolute;
  rep.residual = rep.lhs - series - rep.remainder;
  return rep;
}

MomentIdentity fractional_moment_identity(double beta_exp, const DistributionModel& x,
                                          double alpha, int n, const QuadratureConfig& cfg) {
  check_taylor_args(alpha, n);
  if (!(beta_exp >= alpha)) throw DomainError("fractional_moment_identity: need beta >= alpha");
  if (n > (beta_exp - alpha) / alpha + kExpTol) {
    throw DomainError("fractional_moment_identity: need n <= (beta - alpha)/alpha");
  }
  const EquilibriumView view(x, {alpha, n + 1}, cfg);
  const double m = view.order().total();
  const double e = std::max(beta_exp - m, 0.0);
  const double lead = view.norm() * reciprocal_gamma(m + 1.0) * gamma(1.0 + beta_exp) *
                      reciprocal_gamma(1.0 - m + beta_exp);

  MomentIdentity out;
  out.lhs = fractional_moment(x, beta_exp, Method::automatic, cfg);
  out.rhs = lead * (e > kExpTol ? eq_moment(view, e) : 1.0);
  const RealFn density = [&view](double t) { return eq_density(view, t); };
  const PowerSum power = PowerSum::monomial(1.0, e > kExpTol ? e : 0.0);
  out.rhs_quadrature =
      lead * checked(integrate_power_sum(power, density, x.support_upper(), x.breakpoints(),
                                         cfg.tightened(10.0)),
                     "fractional_moment_identity");
  return out;
}

}  // namespace fracprob
