#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fracprob/numerics.hpp"

namespace fracprob {

struct DistributionSpec;

namespace spec {
struct Exponential {
  double rate = 1.0;
};
struct Uniform {
  double lower = 0.0;
  double upper = 1.0;
};
// Survival exp(−(t/scale)^shape).
struct Weibull {
  double shape = 1.0;
  double scale = 1.0;
};
// Exp(rate1) with probability p, Exp(rate2) otherwise.
struct HyperExp2 {
  double p = 0.5;
  double rate1 = 1.0;
  double rate2 = 1.0;
};
// X = I·Y with P(I = 0) = p.
struct ZeroInflated {
  double p = 0.0;
  std::shared_ptr<const DistributionSpec> inner;
};
// X_d = (X − d)_+.
struct Deductible {
  double d = 0.0;
  std::shared_ptr<const DistributionSpec> inner;
};
// Tabulated survival. Linear between knots, exponential past the last one
// unless the table reaches zero.
struct Numeric {
  std::vector<double> t;
  std::vector<double> survival;
};
}  // namespace spec

struct DistributionSpec {
  std::variant<spec::Exponential, spec::Uniform, spec::Weibull, spec::HyperExp2,
               spec::ZeroInflated, spec::Deductible, spec::Numeric>
      kind;

  std::string kind_name() const;
};

// Throws InvalidParameter naming the offending field.
void validate(const DistributionSpec& s);

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

namespace detail {
class DistributionImpl;
}

// Nonnegative random variable. Immutable; copies share state.
class DistributionModel {
 public:
  // P(X > t); 1 for t < 0.
  double survival(double t) const;
  const std::vector<Atom>& atoms() const;
  double atom_mass_at_zero() const;
  // b = sup{x : F(x) < 1}; +∞ for unbounded support.
  double support_upper() const;
  // Points in (0, b) where the survival function has a kink.
  const std::vector<double>& breakpoints() const;

  // Density of the absolutely continuous part.
  bool has_density() const;
  double density(double t) const;

  std::optional<double> closed_form_moment(double s) const;
  std::optional<double> closed_form_partial(double t, double s) const;

  const DistributionSpec& spec() const;
  std::string describe() const;

 private:
  friend DistributionModel build(const DistributionSpec& spec);
  explicit DistributionModel(std::shared_ptr<const detail::DistributionImpl> impl);
  std::shared_ptr<const detail::DistributionImpl> impl_;
};

DistributionModel build(const DistributionSpec& spec);

namespace catalog {
DistributionModel exponential(double rate);
DistributionModel exponential_mean(double mean);
DistributionModel uniform(double lower, double upper);
DistributionModel weibull(double shape, double scale);
DistributionModel hyperexp2(double p, double rate1, double rate2);
DistributionModel zero_inflated(double p, const DistributionModel& inner);
DistributionModel deductible(double d, const DistributionModel& inner);
DistributionModel numeric(std::vector<double> t, std::vector<double> survival);
}  // namespace catalog

// Closed form when one exists, otherwise quadrature. `quadrature` forces the
// numerical route so the two can be compared.
enum class Method { automatic, quadrature };

// E[X^s], s > −1. s = 0 gives 1. For s < 0, P(X = 0) must be 0.
double fractional_moment(const DistributionModel& x, double s,
                         Method method = Method::automatic,
                         const QuadratureConfig& cfg = {});

// E[(X − t)_+^s] with (y)_+^s = y^s·1{y > 0}; t ≥ 0, s > −1.
// s > 0 uses s·∫_t^b (x−t)^{s−1} F̄(x) dx; s < 0 integrates the density and
// rejects atoms strictly above t.
double upper_partial_moment(const DistributionModel& x, double t, double s,
                            Method method = Method::automatic,
                            const QuadratureConfig& cfg = {});

double survival_at(const DistributionModel& x, double t);

// I_F = [0, b].
std::pair<double, double> support_interval(const DistributionModel& x);

// Smallest t with P(X ≤ t) ≥ prob, by bisection on the survival function.
double quantile(const DistributionModel& x, double prob);

}  // namespace fracprob
