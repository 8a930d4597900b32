#pragma once

#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"
#include "fracprob/order_mvt.hpp"

namespace fracprob {

struct DeductibleSpec {
  DistributionSpec severity;
  double d = 0.0;
};

// X_d = (X − d)_+: atom F(d) at 0, survival F̄(d+t) for t ≥ 0. Needs 0 < d < b.
DistributionModel deductible_model(const DeductibleSpec& spec);
DistributionModel deductible_model(const DistributionModel& severity, double d);

struct DeductibleMvtReport {
  double lhs = 0.0;       // E[g(X_r)] − E[g(X_s)]
  double rhs = 0.0;       // [λ_α(X_r) − λ_α(X_s)] E[D^α g(Z_α)]
  double residual = 0.0;
  ZAlphaModel z;          // built on (X, Y) = (X_s, X_r)
};

// Needs 0 < r < s < b and g with positive exponents only, so that g(0) = 0
// and c₀ = 0.
DeductibleMvtReport deductible_mvt(const PowerSum& g, const DistributionModel& severity, double r,
                                   double s, double alpha, const QuadratureConfig& cfg = {});

struct RatioReport {
  std::vector<double> ratios;
  double reference_ratio = 0.0;  // (e^{−λr} − e^{−λs})/(e^{−λu} − e^{−λv})
  double max_spread = 0.0;
};

// (E[g(X_r)] − E[g(X_s)])/(E[g(X_u)] − E[g(X_v)]) for each g under an Exp(λ)
// severity. Moments go through quadrature so the comparison is not circular.
RatioReport exponential_ratio_check(double lambda, double r, double s, double u, double v,
                                    const std::vector<PowerSum>& gs, double alpha,
                                    const QuadratureConfig& cfg = {});

}  // namespace fracprob
