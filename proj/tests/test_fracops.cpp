#include <cmath>

#include "fracprob/errors.hpp"
#include "fracprob/fracops.hpp"
#include "fracprob/kernels.hpp"
#include "fracprob/suite.hpp"
#include "helpers.hpp"

using namespace fracprob;

TEST_CASE("power sums are normalized") {
  const PowerSum g({{1.0, 2.0}, {3.0, 0.0}, {2.0, 2.0}, {0.0, 5.0}});
  REQUIRE(g.terms().size() == 2);
  CHECK(g.terms()[0].exp == 0.0);
  CHECK(g.terms()[0].coef == 3.0);
  CHECK(g.terms()[1].exp == 2.0);
  CHECK(g.terms()[1].coef == 3.0);
  // exponents within 1e-12 of an integer snap onto it
  CHECK(PowerSum::monomial(1.0, 2.0 + 1e-14).terms()[0].exp == 2.0);
  CHECK(PowerSum({{1.0, 1.0}, {-1.0, 1.0}}).empty());
  CHECK(PowerSum().min_exponent() == kInfinity);
  CHECK_THROWS_AS(PowerSum::monomial(1.0, -1.0), InvalidParameter);
  CHECK_NOTHROW(PowerSum::unchecked({{1.0, -1.5}}));
  CHECK(g.describe() == "3*x^0 + 3*x^2");
}

TEST_CASE("power sum arithmetic") {
  const PowerSum a({{1.0, 0.5}, {2.0, 1.0}});
  const PowerSum b({{-1.0, 0.5}, {1.0, 3.0}});
  const PowerSum s = a + b;
  REQUIRE(s.terms().size() == 2);
  CHECK(s.coefficient_of(1.0) == 2.0);
  CHECK(s.coefficient_of(3.0) == 1.0);
  CHECK(s.coefficient_of(0.5) == 0.0);
  CHECK((2.0 * a).coefficient_of(0.5) == 2.0);
  CHECK((0.0 * a).empty());
}

TEST_CASE("evaluate") {
  CHECK(evaluate(PowerSum({{1.0, 2.0}, {3.0, 0.0}}), 2.0) == 7.0);
  CHECK(evaluate(PowerSum::monomial(2.0, 0.5), 4.0) == 4.0);
  CHECK(evaluate(PowerSum({{1.0, 2.0}, {3.0, 0.0}}), 0.0) == 3.0);
  CHECK(evaluate(PowerSum::monomial(1.0, 0.5), 0.0) == 0.0);
  CHECK_THROWS_AS(evaluate(PowerSum::monomial(1.0, -0.5), 0.0), DomainError);
}

TEST_CASE("RL derivative on power sums") {
  const PowerSum d = power_rl_derivative(PowerSum::monomial(1.0, 1.0), 1, 0.5);
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms()[0].exp == doctest::Approx(0.5));
  CHECK_REL(d.terms()[0].coef, 1.1283791670955126, 1e-14);
  // x^{α−1} is annihilated exactly
  CHECK(power_rl_derivative(PowerSum::monomial(1.0, -0.5), 1, 0.5).empty());
  const PowerSum g({{1.0, 0.3}, {2.0, 1.7}});
  const PowerSum same = power_rl_derivative(g, 0, 0.4);
  CHECK(same.terms().size() == 2);
  CHECK(same.coefficient_of(1.7) == 2.0);
  // sequential: two half-steps of x^{1.5}
  const PowerSum two = power_rl_derivative(PowerSum::monomial(1.0, 1.5), 2, 0.5);
  CHECK_REL(two.coefficient_of(0.5), 1.3293403881791370 * (std::tgamma(2.0) / std::tgamma(1.5)), 1e-13);
}

TEST_CASE("sequential and single-step derivatives differ") {
  // D^{0.5}D^{0.5} x^{-0.5} = 0 since the first step already vanishes; D^1 x^{-0.5} = -0.5 x^{-1.5}.
  const PowerSum g = PowerSum::monomial(1.0, -0.5);
  CHECK(power_rl_derivative(g, 2, 0.5).empty());
  CHECK_FALSE(power_rl_derivative(g, 1, 1.0).empty());
}

TEST_CASE("RL integral followed by RL derivative is the identity") {
  const PowerSum g({{1.5, -0.4}, {1.0, 0.0}, {-2.0, 0.7}, {0.5, 2.0}});
  for (double alpha : {0.2, 0.5, 0.9}) {
    const PowerSum back = power_rl_derivative(power_rl_integral(g, alpha), 1, alpha);
    REQUIRE(back.terms().size() == g.terms().size());
    for (std::size_t k = 0; k < g.terms().size(); ++k) {
      CHECK_NEAR(back.terms()[k].exp, g.terms()[k].exp, 1e-12);
      CHECK_NEAR(back.terms()[k].coef, g.terms()[k].coef, 1e-12);
    }
  }
}

TEST_CASE("Caputo derivative") {
  const PowerSum d = power_caputo_derivative(PowerSum::monomial(1.0, 0.8), 1, 0.4);
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms()[0].exp == doctest::Approx(0.4));
  CHECK_REL(d.terms()[0].coef, 1.0497258567370967, 1e-13);
  CHECK(power_caputo_derivative(PowerSum::monomial(7.0, 0.0), 1, 0.5).empty());
  const PowerSum g({{1.0, 0.0}, {1.0, 2.5}});
  CHECK(power_caputo_derivative(g, 0, 0.3).terms().size() == 2);
  // x^{0.5} at α = 0.8 steps to x^{-0.3}; a second step must be refused
  CHECK_NOTHROW(power_caputo_derivative(PowerSum::monomial(1.0, 0.5), 1, 0.8));
  CHECK_THROWS_AS(power_caputo_derivative(PowerSum::monomial(1.0, 0.5), 2, 0.8), DomainError);
  CHECK_THROWS_AS(power_caputo_derivative(g, 1, 1.5), DomainError);
}

TEST_CASE("Caputo and RL agree on functions vanishing at 0") {
  const PowerSum g({{1.0, 1.0}, {2.0, 2.5}});
  for (double alpha : {0.3, 0.6, 1.0}) {
    const PowerSum a = power_caputo_derivative(g, 1, alpha);
    const PowerSum b = power_rl_derivative(g, 1, alpha);
    REQUIRE(a.terms().size() == b.terms().size());
    for (std::size_t k = 0; k < a.terms().size(); ++k) CHECK_REL(a.terms()[k].coef, b.terms()[k].coef, 1e-14);
  }
}

TEST_CASE("Weyl integral reference values") {
  const DistributionModel e = catalog::exponential(1.0);
  CHECK_NEAR(weyl_integral(e, 0.5, 0.0), 1.0, 1e-9);
  CHECK_NEAR(weyl_integral(e, 2.0, 1.0), std::exp(-1.0), 1e-9);
  CHECK_NEAR(weyl_integral(catalog::uniform(0.0, 1.0), 1.0, 0.0), 0.5, 1e-10);
  CHECK_REL(weyl_integral(catalog::weibull(2.0, 1.0), 0.5, 0.3), 0.78005754701658761, 1e-8);
  CHECK(weyl_integral(catalog::uniform(0.0, 1.0), 0.5, 1.5) == 0.0);
}

TEST_CASE("both Weyl paths agree across the catalog") {
  for (const NamedModel& m : default_catalog()) {
    CAPTURE(m.name);
    for (double order : {0.3, 0.5, 1.0, 1.5, 2.0}) {
      for (double t : {0.0, 0.4, 1.2}) {
        CAPTURE(order);
        CAPTURE(t);
        const double d = weyl_integral(m.model, order, t, {}, WeylPath::direct);
        const double p = weyl_integral(m.model, order, t, {}, WeylPath::partial_moment);
        CHECK_NEAR(d, p, 1e-8 * std::max(std::abs(p), 1e-6));
      }
    }
  }
}

TEST_CASE("tail truncation of the Weyl integral") {
  for (const NamedModel& m : default_catalog()) {
    for (double order : {0.5, 1.0, 2.0, 3.0}) {
      const IntegralResult r = weyl_integral_result(m.model, order, 0.0);
      CAPTURE(m.name);
      CAPTURE(order);
      CHECK(r.converged);
      CHECK(std::pow(r.reach, order) * m.model.survival(r.reach) < 1e-8);
    }
  }
}

TEST_CASE("semigroup on a single point") {
  const DistributionModel u = catalog::uniform(0.0, 1.0);
  const RealFn inner = [&](double v) { return weyl_integral(u, 0.7, v); };
  const double nested = weyl_integral_fn(inner, 0.3, 0.2, u.support_upper(), u.breakpoints());
  CHECK_REL(nested, weyl_integral(u, 1.0, 0.2), 1e-7);
}

TEST_CASE("RL integral") {
  const RealFn one = [](double) { return 1.0; };
  CHECK_NEAR(rl_integral(one, 1.0, 2.0), 2.0, 1e-12);
  CHECK_NEAR(rl_integral(one, 0.5, 1.0), 1.1283791670955126, 1e-10);
  CHECK_NEAR(rl_integral([](double t) { return t; }, 1.0, 1.0), 0.5, 1e-12);
  // singular integrand at 0: I^{0.5} t^{-0.5} = Γ(0.5)/Γ(1) · x^0
  CHECK_NEAR(rl_integral([](double t) { return 1.0 / std::sqrt(t); }, 0.5, 2.0), std::sqrt(M_PI), 1e-8);
  CHECK_THROWS_AS(rl_integral(one, 0.5, 0.0), DomainError);
}

TEST_CASE("numeric RL derivative against the power rule") {
  CHECK_NEAR(rl_derivative_numeric([](double t) { return std::sqrt(t); }, 0.5, 1.0), 0.88622692545275801, 1e-6);
  CHECK_NEAR(rl_derivative_numeric([](double t) { return 1.0 / std::sqrt(t); }, 0.5, 1.0), 0.0, 1e-6);
  CHECK_NEAR(rl_derivative_numeric([](double) { return 1.0; }, 0.5, 1.0), 0.56418958354775628, 1e-6);
  const std::vector<PowerSum> family = {PowerSum::monomial(1.0, 1.0), PowerSum::monomial(1.0, 2.0),
                                        PowerSum({{1.0, 0.5}, {3.0, 1.0}}), PowerSum::monomial(2.0, 0.0)};
  for (double alpha : {0.3, 0.5, 0.75}) {
    for (const PowerSum& g : family) {
      const PowerSum d = power_rl_derivative(g, 1, alpha);
      for (double x : {0.5, 1.0, 2.0}) {
        CAPTURE(alpha);
        CAPTURE(x);
        CAPTURE(g.describe());
        CHECK_NEAR(rl_derivative_numeric([&](double t) { return evaluate(g, t); }, alpha, x), evaluate(d, x), 1e-4);
      }
    }
  }
  CHECK_THROWS_AS(rl_derivative_numeric([](double) { return 1.0; }, 0.5, 1e-5), DomainError);
  CHECK_THROWS_AS(rl_derivative_numeric([](double) { return 1.0; }, 1.0, 1.0), DomainError);
}

TEST_CASE("expectation of a power sum") {
  const DistributionModel e = catalog::exponential(1.0);
  const PowerSum g({{1.0, 0.5}, {3.0, 1.0}});
  CHECK_REL(power_sum_expectation(g, e), 0.88622692545275801 + 3.0, 1e-12);
  CHECK_REL(power_sum_expectation(g, e, Method::quadrature), 0.88622692545275801 + 3.0, 1e-8);
}

TEST_CASE("integrate_power_sum handles the singular leading power") {
  // ∫_0^∞ (t^{-0.5} + t) e^{-t} dt = Γ(0.5) + 1
  const PowerSum g({{1.0, -0.5}, {1.0, 1.0}});
  const std::vector<double> none;
  const IntegralResult r = integrate_power_sum(g, [](double t) { return std::exp(-t); }, kInfinity, none, {});
  CHECK_REL(r.value, std::sqrt(M_PI) + 1.0, 1e-9);
  const PowerSum neg({{-1.0, 0.5}});
  const IntegralResult a = integrate_power_sum(neg, [](double t) { return std::exp(-t); }, kInfinity, none, {}, true);
  CHECK_REL(a.value, 0.88622692545275801, 1e-9);
}

TEST_CASE("FracOrder") {
  CHECK_NOTHROW(FracOrder{0.5, 0}.validate());
  CHECK_THROWS_AS((FracOrder{1.5, 1}.validate()), InvalidParameter);
  CHECK_THROWS_AS((FracOrder{0.5, -1}.validate()), InvalidParameter);
  CHECK(FracOrder{0.25, 3}.total() == 0.75);
  CHECK(FracOrder{0.25, 3}.next_total() == 1.0);
}
