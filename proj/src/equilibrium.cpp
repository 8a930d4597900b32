#include "fracprob/equilibrium.hpp"

#include <cmath>
#include <functional>

#include "fracprob/errors.hpp"

namespace fracprob {

EquilibriumView::EquilibriumView(DistributionModel base, FracOrder order, QuadratureConfig cfg)
    : base_(std::move(base)), order_(order), cfg_(cfg), norm_(0.0) {
  // Any α > 0 defines a proper equilibrium law; the (0, 1] cap in FracOrder
  // is only needed by the sequential derivative.
  if (!(order_.alpha > 0.0) || !std::isfinite(order_.alpha)) {
    throw InvalidParameter("alpha", "must be positive");
  }
  if (order_.n < 1) throw InvalidParameter("n", "equilibrium order must be at least 1");
  cfg_.validate();
  norm_ = fractional_moment(base_, order_.total(), Method::automatic, cfg_);
  if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
    throw DivergenceError("equilibrium: E[X^{n alpha}] must be positive and finite");
  }
}

double eq_survival(const EquilibriumView& v, double t) {
  if (t < 0.0) return 1.0;
  return upper_partial_moment(v.base(), t, v.order().total(), Method::automatic, v.config()) /
         v.norm();
}

double eq_density(const EquilibriumView& v, double t) {
  if (!(t >= 0.0)) throw DomainError("eq_density: t must be nonnegative");
  const double m = v.order().total();
  return m * upper_partial_moment(v.base(), t, m - 1.0, Method::automatic, v.config()) / v.norm();
}

double eq_moment(const EquilibriumView& v, double r) {
  if (!(r > 0.0)) throw DomainError("eq_moment: r must be positive");
  const double m = v.order().total();
  return m * beta(m, r + 1.0) * fractional_moment(v.base(), m + r, Method::automatic, v.config()) /
         v.norm();
}

double eq_survival_recursive(const DistributionModel& x, FracOrder order, double t,
                             const QuadratureConfig& cfg) {
  order.validate();
  if (order.n < 1) throw InvalidParameter("n", "must be at least 1");
  if (order.n > 3) throw InvalidParameter("n", "recursive oracle is limited to n <= 3");
  if (t < 0.0) return 1.0;
  const double a = order.alpha;
  const double b = x.support_upper();

  // Inner levels run tighter so the outer tolerance still holds.
  std::function<double(int, double)> level = [&](int k, double s) -> double {
    if (k == 0) return x.survival(s);
    if (s >= b) return 0.0;
    const QuadratureConfig c = cfg.tightened(std::pow(10.0, order.n - k));
    const RealFn prev = [&level, k](double y) { return level(k - 1, y); };
    const double weyl = weyl_integral_fn(prev, a, s, b, x.breakpoints(), c);
    const double lead = gamma(k * a + 1.0) * reciprocal_gamma((k - 1) * a + 1.0);
    const double ratio = fractional_moment(x, (k - 1) * a, Method::automatic, c) /
                         fractional_moment(x, k * a, Method::automatic, c);
    return lead * ratio * weyl;
  };
  return level(order.n, t);
}

double first_order_cdf_interpretation(const DistributionModel& x, double alpha, double t,
                                      const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("first_order_cdf_interpretation: alpha must be positive");
  if (!(t >= 0.0)) throw DomainError("first_order_cdf_interpretation: t must be nonnegative");
  if (t == 0.0) return 0.0;
  const RealFn band = [&x, t](double y) { return x.survival(y) - x.survival(y + t); };
  std::vector<double> cuts = x.breakpoints();
  for (double c : x.breakpoints()) {
    if (c - t > 0.0) cuts.push_back(c - t);
  }
  const double integral = checked(integrate_weighted(band, 0.0, alpha, x.support_upper(), cuts, cfg),
                                  "first_order_cdf_interpretation");
  return alpha * integral / fractional_moment(x, alpha, Method::automatic, cfg);
}

std::vector<double> characterization_grid(const DistributionModel& x, std::size_t count) {
  const double q = quantile(x, 0.99);
  return kernels::logspace(1e-3 * q, q, count);
}

CharacterizationReport characterization_check(const DistributionModel& x,
                                              const std::vector<double>& alphas,
                                              const std::vector<int>& ns,
                                              const std::vector<double>& grid, double tol,
                                              const QuadratureConfig& cfg, kernels::Exec exec) {
  if (!x.atoms().empty()) {
    throw DomainError("characterization_check: X has atoms, so there is no density to compare");
  }
  if (grid.empty()) throw DomainError("characterization_check: empty grid");
  const std::vector<double> base = kernels::sweep_serial([&x](double t) { return x.density(t); }, grid);

  CharacterizationReport report;
  report.max_deviation = -1.0;
  for (double a : alphas) {
    for (int n : ns) {
      const EquilibriumView view(x, {a, n}, cfg);
      const std::vector<double> eq =
          kernels::sweep([&view](double t) { return eq_density(view, t); }, grid, exec);
      const kernels::MaxDeviation dev = exec == kernels::Exec::parallel
                                            ? kernels::max_abs_deviation_parallel(eq, base)
                                            : kernels::max_abs_deviation_serial(eq, base);
      report.pairs.push_back({a, n, dev.value, grid[dev.index]});
      if (dev.value > report.max_deviation) {
        report.max_deviation = dev.value;
        report.witness_alpha = a;
        report.witness_n = n;
        report.witness_t = grid[dev.index];
      }
    }
  }
  report.is_fixed_point = report.max_deviation <= tol;
  return report;
}

}  // namespace fracprob
