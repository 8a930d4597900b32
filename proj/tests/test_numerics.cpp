#include <cmath>
#include <numbers>

#include "fracprob/errors.hpp"
#include "fracprob/kernels.hpp"
#include "fracprob/numerics.hpp"
#include "helpers.hpp"

using namespace fracprob;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("gamma at reference points") {
  CHECK_REL(fracprob::gamma(0.5), kSqrtPi, 1e-14);
  CHECK_REL(fracprob::gamma(1.5), kSqrtPi / 2, 1e-14);
  CHECK_REL(fracprob::gamma(5.0), 24.0, 1e-14);
  CHECK_REL(fracprob::gamma(0.1), 9.5135076986687318, 1e-13);
  CHECK_REL(fracprob::gamma(-0.5), -2 * kSqrtPi, 1e-14);
  CHECK_REL(log_gamma(100.0), 359.13420536957540, 1e-14);
  CHECK_THROWS_AS(fracprob::gamma(0.0), PoleError);
  CHECK_THROWS_AS(fracprob::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(fracprob::gamma(200.0), OverflowError);
  CHECK_THROWS_AS(log_gamma(-1.0), DomainError);
}

TEST_CASE("reciprocal gamma vanishes at the poles") {
  for (double x : {0.0, -1.0, -2.0, -7.0}) CHECK(reciprocal_gamma(x) == 0.0);
  CHECK_REL(reciprocal_gamma(0.5), 1 / kSqrtPi, 1e-14);
  CHECK(reciprocal_gamma(400.0) >= 0.0);
}

TEST_CASE("beta") {
  CHECK_REL(beta(2.0, 3.0), 1.0 / 12.0, 1e-14);
  CHECK_REL(beta(0.5, 0.5), std::numbers::pi, 1e-14);
  // large arguments go through log-gamma
  CHECK_REL(beta(300.0, 2.0), 1.0 / (300.0 * 301.0), 1e-11);
  CHECK_THROWS_AS(beta(0.0, 1.0), DomainError);
}

TEST_CASE("beta is symmetric and matches the gamma ratio") {
  for (double a : {0.2, 0.7, 1.0, 2.5, 9.0}) {
    for (double b : {0.3, 1.0, 4.0}) {
      CHECK_REL(beta(a, b), beta(b, a), 1e-14);
      CHECK_REL(beta(a, b), std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b), 1e-12);
    }
  }
}

TEST_CASE("quadrature on finite intervals") {
  const IntegralResult r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(r.converged);
  CHECK_NEAR(r.value, 2.0, 1e-12);
  CHECK_NEAR(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0).value, 2.0 / 3.0, 1e-10);
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("quadrature on [a, inf) records its reach") {
  const IntegralResult r = integrate_semi_infinite([](double x) { return x * x * std::exp(-x); }, 0.0);
  CHECK(r.converged);
  CHECK_NEAR(r.value, 2.0, 1e-11);
  CHECK(r.reach > 30.0);
  CHECK(r.reach * r.reach * std::exp(-r.reach) < 1e-8);
}

TEST_CASE("weighted quadrature absorbs the endpoint power") {
  // ∫_0^1 x^{-1/2} dx
  CHECK_NEAR(integrate_singular_power([](double) { return 1.0; }, 0.0, 0.5, {}, 1.0).value, 2.0, 1e-11);
  // ∫_0^∞ x^{-0.7} e^{-x} dx = Γ(0.3)
  const std::vector<double> none;
  CHECK_REL(integrate_weighted([](double x) { return std::exp(-x); }, 0.0, 0.3, kInfinity, none).value,
            2.9915689876875906, 1e-9);
  // kink at 1
  const std::vector<double> kink{1.0};
  CHECK_NEAR(integrate_weighted([](double x) { return std::abs(x - 1.0); }, 0.0, 1.0, 2.0, kink).value, 1.0, 1e-12);
  CHECK_THROWS_AS(integrate_weighted([](double) { return 1.0; }, 0.0, 0.0, 1.0, none), DomainError);
}

TEST_CASE("a non-finite integrand is reported") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0), DivergenceError);
}

TEST_CASE("checked() turns non-convergence into an error") {
  IntegralResult r;
  r.converged = false;
  CHECK_THROWS_AS(checked(r, "x"), ConvergenceError);
  r.converged = true;
  r.value = 3.0;
  CHECK(checked(r, "x") == 3.0);
}

TEST_CASE("quadrature config") {
  QuadratureConfig c;
  CHECK_NOTHROW(c.validate());
  const QuadratureConfig t = c.tightened(10.0);
  CHECK_REL(t.abs_tol, 1e-11, 1e-12);
  CHECK_REL(t.rel_tol, 1e-9, 1e-12);
  c.rel_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidParameter);
}

TEST_CASE("parallel sweep matches the serial reference bitwise") {
  const std::vector<double> grid = kernels::linspace(0.0, 3.0, 257);
  const RealFn f = [](double x) {
    return integrate([x](double u) { return std::exp(-x * u) * std::cos(u); }, 0.0, 1.0).value;
  };
  const std::vector<double> a = kernels::sweep_serial(f, grid);
  const std::vector<double> b = kernels::sweep_parallel(f, grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("exceptions inside a parallel sweep reach the caller") {
  const std::vector<double> grid = kernels::linspace(0.0, 1.0, 16);
  CHECK_THROWS_AS(kernels::sweep_parallel([](double x) -> double {
                    if (x > 0.5) throw DomainError("boom");
                    return x;
                  }, grid),
                  DomainError);
}

TEST_CASE("max deviation reductions") {
  const std::vector<double> a{0.0, 1.0, 5.0, 2.0, 5.0};
  const std::vector<double> b{0.0, 0.0, 1.0, 0.0, 1.0};
  const kernels::MaxDeviation s = kernels::max_abs_deviation_serial(a, b);
  const kernels::MaxDeviation p = kernels::max_abs_deviation_parallel(a, b);
  CHECK(s.value == 4.0);
  CHECK(s.index == 2);
  CHECK(p.value == s.value);
  CHECK(p.index == s.index);
  const kernels::MaxDeviation e = kernels::max_excess(b, a);
  CHECK(e.value == 0.0);
  CHECK(e.index == 0);
}

TEST_CASE("grids") {
  const std::vector<double> l = kernels::linspace(1.0, 2.0, 5);
  CHECK(l.front() == 1.0);
  CHECK(l.back() == 2.0);
  CHECK_NEAR(l[1], 1.25, 1e-15);
  const std::vector<double> g = kernels::logspace(1e-3, 10.0, 5);
  CHECK(g.front() == 1e-3);
  CHECK(g.back() == 10.0);
  CHECK_REL(g[2], 0.1, 1e-14);
  CHECK_THROWS_AS(kernels::logspace(0.0, 1.0, 3), DomainError);
}
