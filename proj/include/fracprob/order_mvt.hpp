#pragma once

#include <optional>
#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"
#include "fracprob/kernels.hpp"

namespace fracprob {

inline constexpr double kOrderSlack = 1e-10;

// E[(X−t)_+^{α−1}]/Γ(α) for t < b, 0 for t ≥ b.
double alpha_survival_transform(const DistributionModel& x, double alpha, double t,
                                const QuadratureConfig& cfg = {});

struct OrderCheckResult {
  bool holds = false;
  double worst_t = 0.0;
  // max_t F̄_X^{(α)}(t) − F̄_Y^{(α)}(t); positive means violation.
  double worst_gap = 0.0;
};

// 0, 64 log-spaced points up to the larger 99.9% quantile, and any finite
// support endpoints.
std::vector<double> order_grid(const DistributionModel& x, const DistributionModel& y,
                               std::size_t count = 64);

// X ≥⁰_{sur α} Y iff F̄_X^{(α)} ≤ F̄_Y^{(α)} on the grid, up to kOrderSlack.
OrderCheckResult check_survival_bounded_order(const DistributionModel& x,
                                              const DistributionModel& y, double alpha,
                                              const std::vector<double>& grid,
                                              const QuadratureConfig& cfg = {},
                                              kernels::Exec exec = kernels::Exec::parallel);

// Mean-value variable for the pair (X, Y).
class ZAlphaModel {
 public:
  // Runs the order check on order_grid and throws OrderViolation when it fails.
  static ZAlphaModel verified(DistributionModel x, DistributionModel y, double alpha,
                              const QuadratureConfig& cfg = {});
  // No order check; z_density may then be negative somewhere.
  static ZAlphaModel unverified(DistributionModel x, DistributionModel y, double alpha,
                                const QuadratureConfig& cfg = {});

  const DistributionModel& x() const { return x_; }
  const DistributionModel& y() const { return y_; }
  double alpha() const { return alpha_; }
  // E[Y^α] − E[X^α]
  double denom() const { return denom_; }
  // E[Y^α]/denom
  double mix_c() const { return mix_c_; }
  double moment_x() const { return mx_; }
  double moment_y() const { return my_; }
  bool is_verified() const { return order_.has_value(); }
  const std::optional<OrderCheckResult>& order_check() const { return order_; }
  const QuadratureConfig& config() const { return cfg_; }
  // max of the two support endpoints
  double support_upper() const;
  std::vector<double> breakpoints() const;

 private:
  ZAlphaModel(DistributionModel x, DistributionModel y, double alpha, const QuadratureConfig& cfg);

  DistributionModel x_, y_;
  double alpha_;
  QuadratureConfig cfg_;
  double mx_, my_, denom_, mix_c_;
  std::optional<OrderCheckResult> order_;
};

// α (E[(Y−t)_+^{α−1}] − E[(X−t)_+^{α−1}]) / (E[Y^α] − E[X^α])
double z_density(const ZAlphaModel& z, double t);

struct MixtureIdentity {
  double lhs = 0.0;  // z_density
  double rhs = 0.0;  // c f_{Y,1} + (1−c) f_{X,1}
};
MixtureIdentity z_mixture_identity(const ZAlphaModel& z, double t);

// α B(α, r+1) (E[Y^{α+r}] − E[X^{α+r}]) / (E[Y^α] − E[X^α])
double z_moment(const ZAlphaModel& z, double r);

// λ_α(X) = E[X^α]/Γ(α+1)
double normalized_moment(const DistributionModel& x, double alpha, const QuadratureConfig& cfg = {});
// V_α(X) = E[X^{α+1}] − α (E[X^α])²
double fractional_variance(const DistributionModel& x, double alpha,
                           const QuadratureConfig& cfg = {});

enum class MeanLocation { below_x, between, above_y };
const char* to_string(MeanLocation m);

struct MeanClassification {
  MeanLocation location = MeanLocation::between;
  double mean_z = 0.0;        // E[Z_α]
  double moment_x = 0.0;      // E[X^α]
  double moment_y = 0.0;      // E[Y^α]
  double delta_v = 0.0;       // V_α(Y) − V_α(X)
  double lower_threshold = 0.0;  // −D(αE[Y^α] − E[X^α])
  double upper_threshold = 0.0;  // D(E[Y^α] − αE[X^α])
  // (E[Z] − E[X^α])/D against (1/(α+1)){(αE[Y^α] − E[X^α])/D + ΔV/D²}
  double identity_lhs = 0.0;
  double identity_rhs = 0.0;
  double identity_residual = 0.0;
  // E[Z] − (2α/(α+1))·(E[X^α]+E[Y^α])/2, which vanishes iff ΔV does
  double equal_variance_gap = 0.0;
};

MeanClassification classify_mean_location(const ZAlphaModel& z);

struct MvtReport {
  double lhs = 0.0;
  double c0 = 0.0;
  double term_c0 = 0.0;
  double term_main = 0.0;
  double residual = 0.0;
};

// E[g(Y)] − E[g(X)] against c₀/Γ(α){E[Y^{α−1}] − E[X^{α−1}]} +
// {λ_α(Y) − λ_α(X)} E[D^α g(Z_α)]. Throws OrderViolation if the order fails.
MvtReport mvt_verify(const PowerSum& g, const DistributionModel& x, const DistributionModel& y,
                     double alpha, const QuadratureConfig& cfg = {});

// The same check on a prebuilt Z_α.
MvtReport mvt_verify(const PowerSum& g, const ZAlphaModel& z);

}  // namespace fracprob
