#include "fracprob/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracprob/errors.hpp"

namespace fracprob {

namespace {

constexpr double kMergeTol = 1e-12;

// 1 + β − α rounded onto a pole of Γ when it is within kMergeTol of one, so
// that x^{α−1} is annihilated exactly even when β was typed as a decimal.
double snap_to_pole(double arg) {
  const double r = std::round(arg);
  return (r <= 0.0 && std::abs(arg - r) <= kMergeTol) ? r : arg;
}

std::vector<PowerTerm> normalize(std::vector<PowerTerm> terms) {
  for (const PowerTerm& t : terms) {
    if (!std::isfinite(t.coef) || !std::isfinite(t.exp)) {
      throw InvalidParameter("terms", "coefficients and exponents must be finite");
    }
  }
  // Iterated shifts like 0.8 − 0.4 − 0.4 leave ulp-sized residue; an exponent
  // that should be 0 must be exactly 0 for the Caputo rule.
  for (PowerTerm& t : terms) {
    const double r = std::round(t.exp);
    if (std::abs(t.exp - r) <= kMergeTol) t.exp = r;
  }
  std::sort(terms.begin(), terms.end(),
            [](const PowerTerm& a, const PowerTerm& b) { return a.exp < b.exp; });
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : terms) {
    if (!out.empty() && std::abs(t.exp - out.back().exp) <= kMergeTol) {
      out.back().coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const PowerTerm& t) { return t.coef == 0.0; });
  return out;
}

}  // namespace

void FracOrder::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidParameter("alpha", "must lie in (0, 1]");
  if (n < 0) throw InvalidParameter("n", "must be nonnegative");
}

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(normalize(std::move(terms))) {
  for (const PowerTerm& t : terms_) {
    if (!(t.exp > -1.0)) throw InvalidParameter("exp", "exponents must exceed -1");
  }
}

PowerSum PowerSum::monomial(double coef, double exp) { return PowerSum({{coef, exp}}); }

PowerSum PowerSum::unchecked(std::vector<PowerTerm> terms) {
  PowerSum g;
  g.terms_ = normalize(std::move(terms));
  return g;
}

double PowerSum::min_exponent() const {
  return terms_.empty() ? kInfinity : terms_.front().exp;
}

double PowerSum::coefficient_of(double exp, double tol) const {
  for (const PowerTerm& t : terms_) {
    if (std::abs(t.exp - exp) <= tol) return t.coef;
  }
  return 0.0;
}

std::string PowerSum::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) os << " + ";
    os << terms_[i].coef << "*x^" << terms_[i].exp;
  }
  return os.str();
}

PowerSum operator+(const PowerSum& a, const PowerSum& b) {
  std::vector<PowerTerm> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return PowerSum::unchecked(std::move(all));
}

PowerSum operator*(double k, const PowerSum& g) {
  std::vector<PowerTerm> all = g.terms_;
  for (PowerTerm& t : all) t.coef *= k;
  return PowerSum::unchecked(std::move(all));
}

double evaluate(const PowerSum& g, double x) {
  if (x < 0.0) throw DomainError("evaluate: x must be nonnegative");
  if (x == 0.0) {
    double c = 0.0;
    for (const PowerTerm& t : g.terms()) {
      if (t.exp < 0.0) throw DomainError("evaluate: singular at x = 0 (exponent " + std::to_string(t.exp) + ")");
      if (t.exp == 0.0) c += t.coef;
    }
    return c;
  }
  double s = 0.0;
  for (const PowerTerm& t : g.terms()) s += t.coef * std::pow(x, t.exp);
  return s;
}

PowerSum power_rl_derivative(const PowerSum& g, int j, double alpha) {
  if (j < 0) throw DomainError("power_rl_derivative: j must be nonnegative");
  if (!(alpha > 0.0)) throw DomainError("power_rl_derivative: alpha must be positive");
  PowerSum cur = g;
  for (int step = 0; step < j; ++step) {
    std::vector<PowerTerm> next;
    for (const PowerTerm& t : cur.terms()) {
      if (!(t.exp > -1.0)) {
        throw DomainError("power_rl_derivative: step " + std::to_string(step + 1) +
                          " applied to non-integrable x^" + std::to_string(t.exp));
      }
      const double k = gamma(1.0 + t.exp) * reciprocal_gamma(snap_to_pole(1.0 + t.exp - alpha));
      if (k != 0.0) next.push_back({t.coef * k, t.exp - alpha});
    }
    cur = PowerSum::unchecked(std::move(next));
  }
  return cur;
}

PowerSum power_rl_integral(const PowerSum& g, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("power_rl_integral: order must be positive");
  std::vector<PowerTerm> out;
  for (const PowerTerm& t : g.terms()) {
    if (!(t.exp > -1.0)) throw DomainError("power_rl_integral: exponents must exceed -1");
    out.push_back({t.coef * gamma(1.0 + t.exp) * reciprocal_gamma(1.0 + t.exp + alpha),
                   t.exp + alpha});
  }
  return PowerSum::unchecked(std::move(out));
}

PowerSum power_caputo_derivative(const PowerSum& g, int i, double alpha) {
  if (i < 0) throw DomainError("power_caputo_derivative: i must be nonnegative");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("power_caputo_derivative: alpha must lie in (0, 1]");
  PowerSum cur = g;
  for (int step = 0; step < i; ++step) {
    std::vector<PowerTerm> next;
    for (const PowerTerm& t : cur.terms()) {
      if (t.exp < 0.0) {
        throw DomainError("power_caputo_derivative: step " + std::to_string(step + 1) +
                          " applied to negative exponent " + std::to_string(t.exp));
      }
      if (t.exp == 0.0) continue;
      const double k = gamma(1.0 + t.exp) * reciprocal_gamma(snap_to_pole(1.0 + t.exp - alpha));
      if (k != 0.0) next.push_back({t.coef * k, t.exp - alpha});
    }
    cur = PowerSum::unchecked(std::move(next));
  }
  return cur;
}

IntegralResult weyl_integral_result(const DistributionModel& x, double order, double t,
                                    const QuadratureConfig& cfg) {
  if (!(order > 0.0)) throw DomainError("weyl_integral: order must be positive");
  if (!(t >= 0.0)) throw DomainError("weyl_integral: t must be nonnegative");
  const RealFn sf = [&x](double y) { return x.survival(y); };
  IntegralResult r = integrate_weighted(sf, t, order, x.support_upper(), x.breakpoints(), cfg);
  const double k = reciprocal_gamma(order);
  r.value *= k;
  r.error_estimate *= k;
  return r;
}

double weyl_integral(const DistributionModel& x, double order, double t,
                     const QuadratureConfig& cfg, WeylPath path) {
  if (path == WeylPath::partial_moment) {
    if (!(order > 0.0)) throw DomainError("weyl_integral: order must be positive");
    return upper_partial_moment(x, t, order, Method::automatic, cfg) * reciprocal_gamma(order + 1.0);
  }
  const double v = checked(weyl_integral_result(x, order, t, cfg), "weyl_integral");
  if (!std::isfinite(v)) throw DivergenceError("weyl_integral: infinite result");
  return v;
}

double weyl_integral_fn(const RealFn& h, double order, double t, double upper,
                        std::span<const double> breakpoints, const QuadratureConfig& cfg) {
  if (!(order > 0.0)) throw DomainError("weyl_integral: order must be positive");
  return checked(integrate_weighted(h, t, order, upper, breakpoints, cfg), "weyl_integral") *
         reciprocal_gamma(order);
}

double rl_integral(const RealFn& g, double order, double x, const QuadratureConfig& cfg) {
  if (!(order > 0.0)) throw DomainError("rl_integral: order must be positive");
  if (!(x > 0.0)) throw DomainError("rl_integral: x must be positive");
  const double half = 0.5 * x;
  QuadratureConfig piece = cfg;
  piece.abs_tol = 0.5 * cfg.abs_tol;
  // [0, x/2] with t = (x/2)w⁴, which tames t^{β} singularities for β > −1.
  const RealFn lower = [&g, x, half, order](double w) {
    const double w3 = w * w * w;
    const double t = half * w3 * w;
    return 4.0 * half * w3 * std::pow(x - t, order - 1.0) * g(t);
  };
  // [x/2, x] in v = x − t so the kernel singularity sits at v = 0.
  const RealFn upper = [&g, x](double v) { return g(x - v); };
  const double a = checked(integrate(lower, 0.0, 1.0, piece), "rl_integral");
  const double b = checked(integrate_weighted(upper, 0.0, order, half, {}, piece), "rl_integral");
  return (a + b) * reciprocal_gamma(order);
}

double rl_derivative_numeric(const RealFn& g, double alpha, double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rl_derivative_numeric: alpha must lie in (0, 1)");
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  if (!(x >= 10.0 * h)) throw DomainError("rl_derivative_numeric: x too close to 0");
  QuadratureConfig inner = cfg;
  inner.abs_tol = std::min(cfg.abs_tol, 1e-14);
  inner.rel_tol = std::min(cfg.rel_tol, 1e-13);
  const double up = rl_integral(g, 1.0 - alpha, x + h, inner);
  const double down = rl_integral(g, 1.0 - alpha, x - h, inner);
  return (up - down) / (2.0 * h);
}

double power_sum_expectation(const PowerSum& g, const DistributionModel& x, Method method,
                             const QuadratureConfig& cfg) {
  double s = 0.0;
  for (const PowerTerm& t : g.terms()) s += t.coef * fractional_moment(x, t.exp, method, cfg);
  return s;
}

IntegralResult integrate_power_sum(const PowerSum& g, const RealFn& w, double upper,
                                   std::span<const double> breakpoints,
                                   const QuadratureConfig& cfg, bool absolute) {
  if (g.empty()) return {0.0, 0.0, true, 0.0};
  const double lead = g.min_exponent();
  if (!(lead > -1.0)) {
    throw DivergenceError("integrate_power_sum: x^" + std::to_string(lead) +
                          " is not integrable at 0");
  }
  const RealFn f = [&g, &w, lead, absolute](double t) {
    double s = 0.0;
    for (const PowerTerm& term : g.terms()) s += term.coef * std::pow(t, term.exp - lead);
    if (absolute) s = std::abs(s);
    return s == 0.0 ? 0.0 : s * w(t);
  };
  return integrate_weighted(f, 0.0, lead + 1.0, upper, breakpoints, cfg);
}

}  // namespace fracprob
