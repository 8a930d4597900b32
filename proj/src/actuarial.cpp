#include "fracprob/actuarial.hpp"

#include <algorithm>
#include <cmath>

#include "fracprob/errors.hpp"

namespace fracprob {

namespace {

void require_positive_exponents(const PowerSum& g, const char* where) {
  if (g.empty()) throw DomainError(std::string(where) + ": g is identically zero");
  for (const PowerTerm& t : g.terms()) {
    if (!(t.exp > 0.0)) {
      throw DomainError(std::string(where) + ": x^" + std::to_string(t.exp) +
                        " is inadmissible; g(0) must vanish");
    }
  }
}

}  // namespace

DistributionModel deductible_model(const DeductibleSpec& spec) {
  return deductible_model(build(spec.severity), spec.d);
}

DistributionModel deductible_model(const DistributionModel& severity, double d) {
  return catalog::deductible(d, severity);
}

DeductibleMvtReport deductible_mvt(const PowerSum& g, const DistributionModel& severity, double r,
                                   double s, double alpha, const QuadratureConfig& cfg) {
  if (!(r > 0.0)) throw InvalidParameter("r", "must be positive");
  if (!(s > r)) throw InvalidParameter("s", "must exceed r");
  if (!(s < severity.support_upper())) throw InvalidParameter("s", "must lie below the support end");
  require_positive_exponents(g, "deductible_mvt");
  ZAlphaModel z = ZAlphaModel::verified(deductible_model(severity, s), deductible_model(severity, r),
                                        alpha, cfg);
  const MvtReport m = mvt_verify(g, z);
  return {m.lhs, m.term_c0 + m.term_main, m.residual, std::move(z)};
}

RatioReport exponential_ratio_check(double lambda, double r, double s, double u, double v,
                                    const std::vector<PowerSum>& gs, double alpha,
                                    const QuadratureConfig& cfg) {
  if (!(r > 0.0 && s > r)) throw InvalidParameter("s", "need 0 < r < s");
  if (!(u > 0.0 && v > u)) throw InvalidParameter("v", "need 0 < u < v");
  if (!(alpha > 0.0)) throw InvalidParameter("alpha", "must be positive");
  const DistributionModel sev = catalog::exponential(lambda);
  const auto xr = deductible_model(sev, r);
  const auto xs = deductible_model(sev, s);
  const auto xu = deductible_model(sev, u);
  const auto xv = deductible_model(sev, v);

  RatioReport rep;
  rep.reference_ratio = (std::exp(-lambda * r) - std::exp(-lambda * s)) /
                        (std::exp(-lambda * u) - std::exp(-lambda * v));
  for (const PowerSum& g : gs) {
    require_positive_exponents(g, "exponential_ratio_check");
    for (const PowerTerm& t : g.terms()) {
      if (!(t.exp > alpha - 1.0)) {
        throw DomainError("exponential_ratio_check: exponent must exceed alpha - 1");
      }
    }
    auto e = [&](const DistributionModel& x) {
      return power_sum_expectation(g, x, Method::quadrature, cfg);
    };
    const double den = e(xu) - e(xv);
    if (den == 0.0) throw DomainError("exponential_ratio_check: zero denominator for g = " + g.describe());
    const double ratio = (e(xr) - e(xs)) / den;
    rep.ratios.push_back(ratio);
    rep.max_spread = std::max(rep.max_spread, std::abs(ratio - rep.reference_ratio));
  }
  return rep;
}

}  // namespace fracprob
