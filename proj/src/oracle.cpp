#include "fracprob/oracle.hpp"

#include <cmath>

#include "fracprob/errors.hpp"

namespace fracprob::oracle {

namespace {

// Ordinary k-th derivative, term by term. Integer exponents below k vanish.
PowerSum classical_derivative(const PowerSum& g, int k) {
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : g.terms()) {
    const int e = static_cast<int>(std::lround(t.exp));
    if (e < k) continue;
    double c = t.coef;
    for (int i = 0; i < k; ++i) c *= e - i;
    out.push_back({c, static_cast<double>(e - k)});
  }
  return PowerSum::unchecked(std::move(out));
}

double expectation(const RealFn& h, const DistributionModel& x, const QuadratureConfig& cfg) {
  double total = 0.0;
  for (const Atom& a : x.atoms()) total += a.mass * h(a.location);
  if (!x.has_density()) return total;
  const RealFn integrand = [&](double t) { return h(t) * x.density(t); };
  const double b = x.support_upper();
  std::vector<double> cuts{0.0};
  for (double p : x.breakpoints()) {
    if (p > 0.0 && p < b) cuts.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += checked(integrate(integrand, cuts[i], cuts[i + 1], cfg), "oracle expectation");
  }
  total += std::isfinite(b)
               ? checked(integrate(integrand, cuts.back(), b, cfg), "oracle expectation")
               : checked(integrate_semi_infinite(integrand, cuts.back(), cfg), "oracle expectation");
  return total;
}

}  // namespace

ClassicalTaylor classical_taylor(const PowerSum& g, const DistributionModel& x, int n,
                                 const QuadratureConfig& cfg) {
  if (n < 0) throw InvalidParameter("n", "must be >= 0");
  for (const PowerTerm& t : g.terms()) {
    if (t.exp < 0.0 || std::abs(t.exp - std::round(t.exp)) > 1e-12) {
      throw DomainError("classical_taylor: g must be a polynomial");
    }
  }
  ClassicalTaylor out;
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    const double at_zero = classical_derivative(g, k).coefficient_of(0.0);
    if (at_zero == 0.0) continue;
    const RealFn xk = [k](double t) { return std::pow(t, k); };
    out.series += at_zero / fact * expectation(xk, x, cfg);
  }
  const PowerSum top = classical_derivative(g, n + 1);
  if (top.empty()) return out;
  const double n_fact = fact;
  const QuadratureConfig inner = cfg.tightened(10.0);
  const RealFn h = [&](double v) {
    if (v <= 0.0) return 0.0;
    const RealFn k = [&](double t) { return std::pow(v - t, n) * evaluate(top, t); };
    return checked(integrate(k, 0.0, v, inner), "oracle remainder") / n_fact;
  };
  out.remainder = expectation(h, x, cfg);
  return out;
}

double hyperexp_deductible_z_density(double p, double rate1, double rate2, double r, double s,
                                     double alpha, double z) {
  if (z < 0.0) return 0.0;
  const double d1 = std::exp(-rate1 * r) - std::exp(-rate1 * s);
  const double d2 = std::exp(-rate2 * r) - std::exp(-rate2 * s);
  const double num = p * std::pow(rate1, 1.0 - alpha) * std::exp(-rate1 * z) * d1 +
                     (1.0 - p) * std::pow(rate2, 1.0 - alpha) * std::exp(-rate2 * z) * d2;
  const double den = p * std::pow(rate1, -alpha) * d1 + (1.0 - p) * std::pow(rate2, -alpha) * d2;
  return num / den;
}

double density_moment(const RealFn& density, double r, double upper,
                      std::span<const double> breakpoints, const QuadratureConfig& cfg) {
  // t^r as the quadrature weight (p = r+1 at t = 0).
  return checked(integrate_weighted(density, 0.0, r + 1.0, upper, breakpoints, cfg),
                 "density_moment");
}

}  // namespace fracprob::oracle
