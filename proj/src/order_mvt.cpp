#include "fracprob/order_mvt.hpp"

#include <algorithm>
#include <cmath>

#include "fracprob/equilibrium.hpp"
#include "fracprob/errors.hpp"

namespace fracprob {

double alpha_survival_transform(const DistributionModel& x, double alpha, double t,
                                const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("alpha_survival_transform: alpha must be positive");
  if (t >= x.support_upper()) return 0.0;
  if (t < 0.0) throw DomainError("alpha_survival_transform: t must be nonnegative");
  return upper_partial_moment(x, t, alpha - 1.0, Method::automatic, cfg) * reciprocal_gamma(alpha);
}

std::vector<double> order_grid(const DistributionModel& x, const DistributionModel& y,
                               std::size_t count) {
  const double hi = std::max(quantile(x, 0.999), quantile(y, 0.999));
  std::vector<double> grid{0.0};
  if (hi > 0.0) {
    const std::vector<double> logs = kernels::logspace(1e-4 * hi, hi, count);
    grid.insert(grid.end(), logs.begin(), logs.end());
  }
  for (double b : {x.support_upper(), y.support_upper()}) {
    if (std::isfinite(b)) grid.push_back(b);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

OrderCheckResult check_survival_bounded_order(const DistributionModel& x,
                                              const DistributionModel& y, double alpha,
                                              const std::vector<double>& grid,
                                              const QuadratureConfig& cfg, kernels::Exec exec) {
  if (grid.empty()) throw DomainError("check_survival_bounded_order: empty grid");
  const auto fx = kernels::sweep(
      [&](double t) { return alpha_survival_transform(x, alpha, t, cfg); }, grid, exec);
  const auto fy = kernels::sweep(
      [&](double t) { return alpha_survival_transform(y, alpha, t, cfg); }, grid, exec);
  const kernels::MaxDeviation worst = kernels::max_excess(fx, fy);
  return {worst.value <= kOrderSlack, grid[worst.index], worst.value};
}

ZAlphaModel::ZAlphaModel(DistributionModel x, DistributionModel y, double alpha,
                         const QuadratureConfig& cfg)
    : x_(std::move(x)), y_(std::move(y)), alpha_(alpha), cfg_(cfg) {
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) throw InvalidParameter("alpha", "must be positive");
  cfg_.validate();
  mx_ = fractional_moment(x_, alpha_, Method::automatic, cfg_);
  my_ = fractional_moment(y_, alpha_, Method::automatic, cfg_);
  denom_ = my_ - mx_;
  if (!(denom_ > 0.0)) {
    throw DomainError("ZAlphaModel: E[Y^alpha] - E[X^alpha] must be positive (got " +
                      std::to_string(denom_) + ")");
  }
  mix_c_ = my_ / denom_;
}

ZAlphaModel ZAlphaModel::verified(DistributionModel x, DistributionModel y, double alpha,
                                  const QuadratureConfig& cfg) {
  ZAlphaModel z(std::move(x), std::move(y), alpha, cfg);
  const OrderCheckResult r =
      check_survival_bounded_order(z.x_, z.y_, alpha, order_grid(z.x_, z.y_), z.cfg_);
  if (!r.holds) {
    throw OrderViolation("survival bounded order fails at t = " + std::to_string(r.worst_t) +
                         " (gap " + std::to_string(r.worst_gap) + ")");
  }
  z.order_ = r;
  return z;
}

ZAlphaModel ZAlphaModel::unverified(DistributionModel x, DistributionModel y, double alpha,
                                    const QuadratureConfig& cfg) {
  return ZAlphaModel(std::move(x), std::move(y), alpha, cfg);
}

double ZAlphaModel::support_upper() const { return std::max(x_.support_upper(), y_.support_upper()); }

std::vector<double> ZAlphaModel::breakpoints() const {
  std::vector<double> b = x_.breakpoints();
  b.insert(b.end(), y_.breakpoints().begin(), y_.breakpoints().end());
  for (double e : {x_.support_upper(), y_.support_upper()}) {
    if (std::isfinite(e)) b.push_back(e);
  }
  return b;
}

double z_density(const ZAlphaModel& z, double t) {
  if (!(t >= 0.0)) throw DomainError("z_density: t must be nonnegative");
  const double s = z.alpha() - 1.0;
  const double py = upper_partial_moment(z.y(), t, s, Method::automatic, z.config());
  const double px = upper_partial_moment(z.x(), t, s, Method::automatic, z.config());
  return z.alpha() * (py - px) / z.denom();
}

MixtureIdentity z_mixture_identity(const ZAlphaModel& z, double t) {
  const EquilibriumView vx(z.x(), {z.alpha(), 1}, z.config());
  const EquilibriumView vy(z.y(), {z.alpha(), 1}, z.config());
  const double c = z.mix_c();
  return {z_density(z, t), c * eq_density(vy, t) + (1.0 - c) * eq_density(vx, t)};
}

double z_moment(const ZAlphaModel& z, double r) {
  if (!(r > 0.0)) throw DomainError("z_moment: r must be positive");
  const double a = z.alpha();
  const double ey = fractional_moment(z.y(), a + r, Method::automatic, z.config());
  const double ex = fractional_moment(z.x(), a + r, Method::automatic, z.config());
  return a * beta(a, r + 1.0) * (ey - ex) / z.denom();
}

double normalized_moment(const DistributionModel& x, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("normalized_moment: alpha must be positive");
  return fractional_moment(x, alpha, Method::automatic, cfg) * reciprocal_gamma(alpha + 1.0);
}

double fractional_variance(const DistributionModel& x, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("fractional_variance: alpha must be positive");
  const double m = fractional_moment(x, alpha, Method::automatic, cfg);
  return fractional_moment(x, alpha + 1.0, Method::automatic, cfg) - alpha * m * m;
}

const char* to_string(MeanLocation m) {
  switch (m) {
    case MeanLocation::below_x: return "below_X";
    case MeanLocation::between: return "between";
    case MeanLocation::above_y: return "above_Y";
  }
  return "unknown";
}

MeanClassification classify_mean_location(const ZAlphaModel& z) {
  const double a = z.alpha();
  MeanClassification out;
  out.mean_z = z_moment(z, 1.0);
  out.moment_x = z.moment_x();
  out.moment_y = z.moment_y();
  out.delta_v = fractional_variance(z.y(), a, z.config()) - fractional_variance(z.x(), a, z.config());
  const double d = z.denom();
  out.lower_threshold = -d * (a * out.moment_y - out.moment_x);
  out.upper_threshold = d * (out.moment_y - a * out.moment_x);
  out.identity_lhs = (out.mean_z - out.moment_x) / d;
  out.identity_rhs = ((a * out.moment_y - out.moment_x) / d + out.delta_v / (d * d)) / (a + 1.0);
  out.identity_residual = out.identity_lhs - out.identity_rhs;
  out.equal_variance_gap = out.mean_z - a / (a + 1.0) * (out.moment_x + out.moment_y);
  if (out.delta_v <= out.lower_threshold) {
    out.location = MeanLocation::below_x;
  } else if (out.delta_v >= out.upper_threshold) {
    out.location = MeanLocation::above_y;
  } else {
    out.location = MeanLocation::between;
  }
  return out;
}

MvtReport mvt_verify(const PowerSum& g, const DistributionModel& x, const DistributionModel& y,
                     double alpha, const QuadratureConfig& cfg) {
  return mvt_verify(g, ZAlphaModel::verified(x, y, alpha, cfg));
}

MvtReport mvt_verify(const PowerSum& g, const ZAlphaModel& z) {
  if (!z.is_verified()) throw OrderViolation("mvt_verify: the survival bounded order is not verified");
  const double a = z.alpha();
  const QuadratureConfig& cfg = z.config();
  const double edge = a - 1.0;
  for (const PowerTerm& t : g.terms()) {
    if (t.exp < edge - 1e-12) {
      throw DomainError("mvt_verify: x^" + std::to_string(t.exp) +
                        " lies below x^(alpha-1); the c0 limit diverges");
    }
  }
  if (z.x().atom_mass_at_zero() > 0.0 || z.y().atom_mass_at_zero() > 0.0) {
    for (const PowerTerm& t : g.terms()) {
      if (t.exp < 0.0 || (t.exp == 0.0 && a != 1.0)) {
        throw DomainError("mvt_verify: x^" + std::to_string(t.exp) +
                          " is inadmissible when X or Y has an atom at 0");
      }
    }
  }

  MvtReport r;
  r.lhs = power_sum_expectation(g, z.y(), Method::automatic, cfg) -
          power_sum_expectation(g, z.x(), Method::automatic, cfg);
  r.c0 = gamma(a) * g.coefficient_of(edge);
  if (r.c0 != 0.0) {
    r.term_c0 = r.c0 * reciprocal_gamma(a) *
                (fractional_moment(z.y(), edge, Method::automatic, cfg) -
                 fractional_moment(z.x(), edge, Method::automatic, cfg));
  }
  const PowerSum dg = power_rl_derivative(g, 1, a);
  const RealFn fz = [&z](double t) { return z_density(z, t); };
  const std::vector<double> cuts = z.breakpoints();
  const double expect =
      checked(integrate_power_sum(dg, fz, z.support_upper(), cuts, cfg.tightened(10.0)),
              "mvt_verify");
  r.term_main = (normalized_moment(z.y(), a, cfg) - normalized_moment(z.x(), a, cfg)) * expect;
  r.residual = r.lhs - (r.term_c0 + r.term_main);
  return r;
}

}  // namespace fracprob
