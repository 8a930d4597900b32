#include <cmath>

#include "fracprob/equilibrium.hpp"
#include "fracprob/errors.hpp"
#include "fracprob/kernels.hpp"
#include "fracprob/suite.hpp"
#include "helpers.hpp"

using namespace fracprob;

namespace {
const DistributionModel kExp1 = catalog::exponential(1.0);
const DistributionModel kUnif = catalog::uniform(0.0, 1.0);
}  // namespace

TEST_CASE("equilibrium survival and density") {
  CHECK_NEAR(eq_survival(EquilibriumView(kExp1, {0.5, 2}), 1.0), std::exp(-1.0), 1e-12);
  CHECK_NEAR(eq_survival(EquilibriumView(kUnif, {1.0, 1}), 0.5), 0.25, 1e-12);
  CHECK_NEAR(eq_density(EquilibriumView(kExp1, {0.5, 1}), 2.0), std::exp(-2.0), 1e-12);
  CHECK_NEAR(eq_density(EquilibriumView(kUnif, {1.0, 1}), 0.25), 1.5, 1e-12);
  CHECK_NEAR(eq_density(EquilibriumView(kExp1, {1.0, 1}), 0.0), 1.0, 1e-12);
}

TEST_CASE("equilibrium survival is 1 at 0 and nonincreasing") {
  for (const NamedModel& m : default_catalog()) {
    for (FracOrder o : {FracOrder{0.5, 1}, FracOrder{1.0, 1}, FracOrder{0.3, 3}, FracOrder{1.0, 2}}) {
      CAPTURE(m.name);
      CAPTURE(o.alpha);
      CAPTURE(o.n);
      const EquilibriumView v(m.model, o);
      CHECK_NEAR(eq_survival(v, 0.0), 1.0, 1e-12);
      double prev = 1.0;
      for (double t : kernels::linspace(0.0, quantile(m.model, 0.999), 60)) {
        const double s = eq_survival(v, t);
        CHECK(s <= prev + 1e-14);
        CHECK(s >= 0.0);
        prev = s;
      }
    }
  }
}

TEST_CASE("equilibrium survival vanishes at the truncation point") {
  for (const NamedModel& m : default_catalog()) {
    for (FracOrder o : {FracOrder{0.5, 1}, FracOrder{1.0, 2}}) {
      const IntegralResult r = weyl_integral_result(m.model, o.total(), 0.0);
      CAPTURE(m.name);
      CHECK(eq_survival(EquilibriumView(m.model, o), r.reach) < 1e-6);
    }
  }
}

TEST_CASE("the density integrates to the survival") {
  for (const NamedModel& m : default_catalog()) {
    for (FracOrder o : {FracOrder{0.5, 1}, FracOrder{1.0, 1}, FracOrder{0.75, 2}}) {
      const EquilibriumView v(m.model, o);
      const RealFn f = [&](double t) { return eq_density(v, t); };
      for (double t : {0.0, 0.3, 1.1}) {
        CAPTURE(m.name);
        CAPTURE(o.alpha);
        CAPTURE(o.n);
        CAPTURE(t);
        const double tail = integrate_weighted(f, t, 1.0, m.model.support_upper(), m.model.breakpoints()).value;
        CHECK_NEAR(tail, eq_survival(v, t), 1e-7);
      }
    }
  }
}

TEST_CASE("recursive definition reproduces the direct form") {
  CHECK_NEAR(eq_survival_recursive(kExp1, {0.5, 2}, 1.0), std::exp(-1.0), 1e-8);
  CHECK_NEAR(eq_survival_recursive(kUnif, {1.0, 2}, 0.0), 1.0, 1e-8);
  CHECK_NEAR(eq_survival_recursive(kExp1, {1.0, 1}, 0.7), 0.49658530379140951, 1e-9);
  for (const DistributionModel& x : {kExp1, kUnif}) {
    for (double alpha : {0.5, 1.0}) {
      for (int n : {1, 2, 3}) {
        const EquilibriumView v(x, {alpha, n});
        for (double t : {0.1, 0.5, 0.8}) {
          CHECK_REL(eq_survival_recursive(x, {alpha, n}, t), eq_survival(v, t), 1e-5);
        }
      }
    }
  }
  CHECK_THROWS_AS(eq_survival_recursive(kExp1, {0.5, 4}, 1.0), DomainError);
}

TEST_CASE("equilibrium moments") {
  for (double alpha : {0.3, 0.5, 1.0}) {
    for (int n : {1, 2, 3}) CHECK_NEAR(eq_moment(EquilibriumView(kExp1, {alpha, n}), 1.0), 1.0, 1e-12);
  }
  CHECK_NEAR(eq_moment(EquilibriumView(kUnif, {1.0, 1}), 1.0), 1.0 / 3.0, 1e-13);
  CHECK_NEAR(eq_moment(EquilibriumView(kExp1, {0.5, 3}), 2.0), 2.0, 1e-12);
}

TEST_CASE("at alpha = 1 the moments are the stationary-excess ones") {
  // n B(n, r+1) E[X^{n+r}] / E[X^n] for Uniform(0,1): E[X^k] = 1/(k+1)
  for (int n : {1, 2, 3}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const double want = n * std::tgamma(n) * std::tgamma(r + 1) / std::tgamma(n + r + 1) * (n + 1.0) / (n + r + 1.0);
      CHECK_REL(eq_moment(EquilibriumView(kUnif, {1.0, n}), r), want, 1e-13);
    }
  }
}

TEST_CASE("CDF of the first-order variable as a band integral") {
  CHECK_NEAR(first_order_cdf_interpretation(kExp1, 1.0, 1.0), 1.0 - std::exp(-1.0), 1e-9);
  CHECK(first_order_cdf_interpretation(kExp1, 0.5, 0.0) == 0.0);
  CHECK_NEAR(first_order_cdf_interpretation(kUnif, 1.0, 0.5), 0.75, 1e-9);
  for (const NamedModel& m : default_catalog()) {
    for (double alpha : {0.4, 0.8}) {
      const EquilibriumView v(m.model, {alpha, 1});
      for (double t : {0.2, 1.0}) {
        CAPTURE(m.name);
        CHECK_NEAR(first_order_cdf_interpretation(m.model, alpha, t), 1.0 - eq_survival(v, t), 1e-7);
      }
    }
  }
}

TEST_CASE("characterization") {
  const DistributionModel e2 = catalog::exponential(2.0);
  const CharacterizationReport yes = characterization_check(e2, {0.3, 0.7, 1.0}, {1, 2}, characterization_grid(e2), 1e-6);
  CHECK(yes.is_fixed_point);
  CHECK(yes.max_deviation < 1e-9);
  CHECK(yes.pairs.size() == 6);

  const DistributionModel w = catalog::weibull(2.0, 1.0);
  const CharacterizationReport no = characterization_check(w, {0.3, 0.7, 1.0}, {1, 2}, characterization_grid(w), 1e-6);
  CHECK_FALSE(no.is_fixed_point);
  CHECK(no.max_deviation > 0.05);

  const CharacterizationReport u = characterization_check(kUnif, {1.0}, {1}, characterization_grid(kUnif), 1e-6);
  CHECK_FALSE(u.is_fixed_point);
  // f_1(0) = 2 against f(0) = 1 at the left end of the grid
  CHECK(u.max_deviation > 0.9);

  CHECK_THROWS_AS(characterization_check(catalog::zero_inflated(0.3, kExp1), {1.0}, {1}, {0.5}, 1e-6), DomainError);
}

TEST_CASE("serial and parallel characterization agree") {
  const DistributionModel w = catalog::weibull(1.5, 2.0);
  const std::vector<double> grid = characterization_grid(w);
  const CharacterizationReport s = characterization_check(w, {0.5, 1.0}, {1, 2}, grid, 1e-6, {}, kernels::Exec::serial);
  const CharacterizationReport p = characterization_check(w, {0.5, 1.0}, {1, 2}, grid, 1e-6, {}, kernels::Exec::parallel);
  CHECK(s.max_deviation == p.max_deviation);
  CHECK(s.witness_t == p.witness_t);
}

TEST_CASE("characterization grid") {
  const std::vector<double> g = characterization_grid(kExp1);
  REQUIRE(g.size() == 20);
  CHECK(g.front() > 0.0);
  CHECK_REL(g.back(), std::log(100.0), 1e-8);
}
