#include <cmath>

#include "fracprob/actuarial.hpp"
#include "fracprob/errors.hpp"
#include "fracprob/kernels.hpp"
#include "helpers.hpp"

using namespace fracprob;

namespace {

const DistributionModel kExp1 = catalog::exponential(1.0);

// Σ p_i λ_i^{1−α} e^{−λ_i z} Δ_i / Σ p_i λ_i^{−α} Δ_i, Δ_i = e^{−λ_i r} − e^{−λ_i s}
double hyperexp_z(double p, double l1, double l2, double r, double s, double alpha, double z) {
  const double w[2] = {p, 1.0 - p}, l[2] = {l1, l2};
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double d = std::exp(-l[i] * r) - std::exp(-l[i] * s);
    num += w[i] * std::pow(l[i], 1.0 - alpha) * std::exp(-l[i] * z) * d;
    den += w[i] * std::pow(l[i], -alpha) * d;
  }
  return num / den;
}

}  // namespace

TEST_CASE("deductible model") {
  const DistributionModel d = deductible_model(kExp1, 1.0);
  CHECK_NEAR(d.atom_mass_at_zero(), 1.0 - std::exp(-1.0), 1e-15);
  for (double t : {0.0, 0.4, 2.0}) CHECK_NEAR(d.survival(t), std::exp(-1.0 - t), 1e-15);
  const DistributionModel u = deductible_model(catalog::uniform(0.0, 1.0), 0.5);
  CHECK_NEAR(u.atom_mass_at_zero(), 0.5, 1e-15);
  CHECK(u.support_upper() == 0.5);
  CHECK_THROWS_AS(deductible_model(kExp1, 0.0), InvalidParameter);
  CHECK_THROWS_AS(deductible_model(catalog::uniform(0.0, 1.0), 1.0), InvalidParameter);
}

TEST_CASE("deductible mean value theorem") {
  const DeductibleMvtReport a = deductible_mvt(PowerSum::monomial(1.0, 1.0), kExp1, 0.5, 1.0, 1.0);
  CHECK_NEAR(a.lhs, std::exp(-0.5) - std::exp(-1.0), 1e-12);
  CHECK(std::abs(a.residual) <= 1e-7);

  const DistributionModel h = catalog::hyperexp2(0.4, 1.0, 3.0);
  CHECK(std::abs(deductible_mvt(PowerSum::monomial(1.0, 2.0), h, 0.2, 0.8, 1.0).residual) <= 1e-5);
  CHECK(std::abs(deductible_mvt(PowerSum::monomial(1.0, 0.5), kExp1, 0.5, 1.0, 0.5).residual) <= 1e-5);

  CHECK_THROWS_AS(deductible_mvt(PowerSum::monomial(1.0, 1.0), kExp1, 1.0, 0.5, 1.0), InvalidParameter);
  CHECK_THROWS_AS(deductible_mvt(PowerSum::monomial(1.0, 0.0), kExp1, 0.5, 1.0, 1.0), DomainError);
}

TEST_CASE("exponential severity gives an exponential Z") {
  for (double lambda : {1.0, 2.0}) {
    const DistributionModel x = catalog::exponential(lambda);
    for (auto [r, s, alpha] : {std::tuple{0.3, 0.9, 0.5}, std::tuple{0.5, 1.0, 1.0}, std::tuple{0.1, 2.0, 0.8}}) {
      const DeductibleMvtReport rep = deductible_mvt(PowerSum::monomial(1.0, 1.5), x, r, s, alpha);
      for (double z : kernels::linspace(0.0, 5.0, 20)) {
        CAPTURE(lambda);
        CAPTURE(z);
        CHECK_NEAR(z_density(rep.z, z), lambda * std::exp(-lambda * z), 1e-8);
      }
    }
  }
}

TEST_CASE("hyperexponential Z density matches the mixture display") {
  const DistributionModel h = catalog::hyperexp2(0.4, 1.0, 3.0);
  for (double alpha : {0.5, 1.0}) {
    const DeductibleMvtReport rep = deductible_mvt(PowerSum::monomial(1.0, 1.0), h, 0.2, 0.8, alpha);
    for (double z : kernels::linspace(0.0, 4.0, 20)) {
      CHECK_NEAR(z_density(rep.z, z), hyperexp_z(0.4, 1.0, 3.0, 0.2, 0.8, alpha, z), 1e-7);
    }
  }
}

TEST_CASE("normalized moment of a deductible") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (double d : {0.2, 1.0}) {
      for (double alpha : {0.3, 0.5, 1.0}) {
        const double got = normalized_moment(deductible_model(catalog::exponential(lambda), d), alpha,
                                             {});
        CHECK_REL(got, std::exp(-lambda * d) * std::pow(lambda, -alpha), 1e-10);
      }
    }
  }
}

TEST_CASE("ratio check") {
  const std::vector<PowerSum> gs = {PowerSum::monomial(1.0, 1.0), PowerSum::monomial(1.0, 2.0)};
  const RatioReport a = exponential_ratio_check(1.0, 0.5, 1.0, 1.0, 2.0, gs, 1.0);
  CHECK_NEAR(a.reference_ratio, 1.0262619394982736, 1e-13);
  CHECK(a.max_spread <= 1e-6);
  CHECK(a.ratios.size() == 2);

  const RatioReport b = exponential_ratio_check(2.0, 0.4, 1.1, 0.4, 1.1, gs, 1.0);
  for (double r : b.ratios) CHECK_NEAR(r, 1.0, 1e-12);

  const RatioReport c = exponential_ratio_check(1.0, 0.5, 1.0, 1.0, 2.0, {PowerSum::monomial(1.0, 0.5)}, 0.5);
  CHECK(c.max_spread <= 1e-5);

  const std::vector<PowerSum> family = {PowerSum::monomial(1.0, 0.5), PowerSum::monomial(1.0, 1.0),
                                        PowerSum::monomial(1.0, 2.0), PowerSum({{1.0, 0.5}, {3.0, 1.0}})};
  for (double alpha : {0.5, 1.0}) {
    CHECK(exponential_ratio_check(1.5, 0.2, 0.7, 0.3, 1.5, family, alpha).max_spread <= 1e-5);
  }
  CHECK_THROWS_AS(exponential_ratio_check(1.0, 1.0, 0.5, 1.0, 2.0, gs, 1.0), InvalidParameter);
}
