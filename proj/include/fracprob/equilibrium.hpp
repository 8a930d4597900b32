#pragma once

#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"
#include "fracprob/kernels.hpp"

namespace fracprob {

// X_α^{(n)}: survival E[(X−t)_+^{nα}]/E[X^{nα}], n ≥ 1.
class EquilibriumView {
 public:
  EquilibriumView(DistributionModel base, FracOrder order, QuadratureConfig cfg = {});

  const DistributionModel& base() const { return base_; }
  const FracOrder& order() const { return order_; }
  // E[X^{nα}]
  double norm() const { return norm_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  DistributionModel base_;
  FracOrder order_;
  QuadratureConfig cfg_;
  double norm_;
};

double eq_survival(const EquilibriumView& v, double t);
// nα E[(X−t)_+^{nα−1}]/E[X^{nα}]
double eq_density(const EquilibriumView& v, double t);
// nα B(nα, r+1) E[X^{nα+r}]/E[X^{nα}]
double eq_moment(const EquilibriumView& v, double r);

// F̄_k = Γ(kα+1)/Γ((k−1)α+1) · E[X^{(k−1)α}]/E[X^{kα}] · I_−^α F̄_{k−1},
// evaluated literally with n nested quadratures. n ≤ 3.
double eq_survival_recursive(const DistributionModel& x, FracOrder order, double t,
                             const QuadratureConfig& cfg = {});

// α/E[X^α] ∫_0^∞ y^{α−1} P(y < X ≤ y+t) dy, which should equal 1 − F̄_1(t).
double first_order_cdf_interpretation(const DistributionModel& x, double alpha, double t,
                                      const QuadratureConfig& cfg = {});

struct PairDeviation {
  double alpha = 0.0;
  int n = 0;
  double max_deviation = 0.0;
  double worst_t = 0.0;
};

struct CharacterizationReport {
  bool is_fixed_point = false;
  double max_deviation = 0.0;
  double witness_alpha = 0.0;
  int witness_n = 0;
  double witness_t = 0.0;
  std::vector<PairDeviation> pairs;
};

// 20 log-spaced points on (0, q₀.₉₉].
std::vector<double> characterization_grid(const DistributionModel& x, std::size_t count = 20);

// max |f_n^α(t) − f(t)| over alphas × ns × grid. X must be absolutely continuous.
CharacterizationReport characterization_check(const DistributionModel& x,
                                              const std::vector<double>& alphas,
                                              const std::vector<int>& ns,
                                              const std::vector<double>& grid, double tol,
                                              const QuadratureConfig& cfg = {},
                                              kernels::Exec exec = kernels::Exec::parallel);

}  // namespace fracprob
