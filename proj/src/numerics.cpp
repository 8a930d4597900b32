#include "fracprob/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "fracprob/errors.hpp"

namespace fracprob {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMaxGammaArg = 171.6243769563027;
constexpr int kMaxPanels = 4000;
constexpr int kMaxDoublings = 64;

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double eval(const RealFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DivergenceError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

struct Panel {
  double a, b, value, error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// QUADPACK qk15 error heuristic.
Panel gauss_kronrod(const RealFn& f, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = eval(f, centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = eval(f, centre - dx);
    f2[j] = eval(f, centre + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
  }
  const double scale = std::abs(half);
  resabs *= scale;
  resasc *= scale;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {a, b, resk * half, err, depth};
}

double target(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw InvalidParameter("abs_tol", "must be positive");
  if (!(rel_tol > 0.0)) throw InvalidParameter("rel_tol", "must be positive");
  if (!(tail_epsilon > 0.0)) throw InvalidParameter("tail_epsilon", "must be positive");
  if (max_depth < 1) throw InvalidParameter("max_depth", "must be at least 1");
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig c = *this;
  c.abs_tol = std::max(abs_tol / factor, 1e-300);
  c.rel_tol = std::max(rel_tol / factor, 4.0 * kEps);
  return c;
}

double checked(const IntegralResult& r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (value " +
                           std::to_string(r.value) + ", error estimate " +
                           std::to_string(r.error_estimate) + ")");
  }
  return r.value;
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: argument is NaN");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at nonpositive integer " + std::to_string(x));
  }
  if (x > kMaxGammaArg) throw OverflowError("gamma: overflow for x = " + std::to_string(x));
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double reciprocal_gamma(double x) {
  if (std::isnan(x)) throw DomainError("reciprocal_gamma: argument is NaN");
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > kMaxGammaArg) return 0.0;
  return 1.0 / std::tgamma(x);
}

double beta(double a, double b) {
  if (!(a > 0.0)) throw DomainError("beta: a must be positive");
  if (!(b > 0.0)) throw DomainError("beta: b must be positive");
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (lo > 1e-6 && lo + hi < 170.0) {
    return std::tgamma(lo) * std::tgamma(hi) / std::tgamma(lo + hi);
  }
  return std::exp(log_gamma(lo) + log_gamma(hi) - log_gamma(lo + hi));
}

IntegralResult integrate(const RealFn& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, 0.0, true, b};
  if (a > b) {
    IntegralResult r = integrate(f, b, a, cfg);
    r.value = -r.value;
    r.reach = b;
    return r;
  }
  std::priority_queue<Panel> open;
  Panel first = gauss_kronrod(f, a, b, 0);
  double total = first.value;
  double error = first.error;
  open.push(first);
  bool converged = true;
  int panels = 1;
  while (error > target(cfg, total)) {
    if (open.empty()) {
      converged = false;
      break;
    }
    Panel worst = open.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool splittable = worst.depth < cfg.max_depth && mid > worst.a && mid < worst.b &&
                            (worst.b - worst.a) > 8.0 * kEps * std::max(1.0, std::abs(mid));
    if (!splittable || panels >= kMaxPanels) {
      converged = false;
      break;
    }
    open.pop();
    Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    ++panels;
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  for (; !open.empty(); open.pop()) {
    total += open.top().value;
    error += open.top().error;
  }
  converged = converged && error <= target(cfg, total);
  return {total, error, converged, b};
}

IntegralResult integrate_semi_infinite(const RealFn& f, double a, const QuadratureConfig& cfg) {
  cfg.validate();
  double lo = a;
  double width = 1.0;
  double total = 0.0;
  double error = 0.0;
  bool converged = true;
  int small_in_row = 0;
  double last_increment = 0.0;
  for (int k = 0; k < kMaxDoublings; ++k) {
    const double hi = a + width;
    QuadratureConfig panel_cfg = cfg;
    panel_cfg.abs_tol = std::max(cfg.abs_tol * std::ldexp(1.0, -std::min(k + 2, 60)), 1e-300);
    panel_cfg.rel_tol = std::max(0.25 * cfg.rel_tol, 4.0 * kEps);
    const IntegralResult part = integrate(f, lo, hi, panel_cfg);
    converged = converged && part.converged;
    total += part.value;
    error += part.error_estimate;
    last_increment = part.value;
    lo = hi;
    width *= 2.0;
    if (std::abs(part.value) <= cfg.tail_epsilon * (1.0 + std::abs(total))) {
      if (++small_in_row >= 2) {
        error += std::abs(last_increment);
        converged = converged && error <= target(cfg, total);
        return {total, error, converged, lo};
      }
    } else {
      small_in_row = 0;
    }
  }
  return {total, error + std::abs(last_increment), false, lo};
}

IntegralResult integrate_singular_power(const RealFn& f, double t, double p,
                                        const QuadratureConfig& cfg, double upper) {
  return integrate_weighted(f, t, p, upper, {}, cfg);
}

IntegralResult integrate_weighted(const RealFn& f, double t, double p, double upper,
                                  std::span<const double> breakpoints,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(p > 0.0)) throw DomainError("integrate_weighted: exponent p must be positive");
  if (!(upper > t)) return {0.0, 0.0, true, t};

  std::vector<double> cuts;
  for (double c : breakpoints) {
    if (c > t && c < upper) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const bool singular = p < 1.0;
  const double inv_p = 1.0 / p;
  // Integrand in u where x = t + u^{1/p}; the Jacobian cancels the weight.
  const RealFn substituted = [&f, t, inv_p](double u) {
    return inv_p * f(t + std::pow(u, inv_p));
  };
  const RealFn weighted = [&f, t, p](double x) {
    return p == 1.0 ? f(x) : std::pow(x - t, p - 1.0) * f(x);
  };

  const int pieces = static_cast<int>(cuts.size()) + 1;
  QuadratureConfig piece_cfg = cfg;
  piece_cfg.abs_tol = std::max(cfg.abs_tol / (2.0 * pieces), 1e-300);
  piece_cfg.rel_tol = std::max(0.5 * cfg.rel_tol, 4.0 * kEps);

  IntegralResult out{0.0, 0.0, true, upper};
  auto add = [&out](const IntegralResult& r) {
    out.value += r.value;
    out.error_estimate += r.error_estimate;
    out.converged = out.converged && r.converged;
  };

  double lo = t;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const double hi = i < cuts.size() ? cuts[i] : upper;
    const bool last = i == cuts.size();
    if (i == 0 && singular) {
      if (std::isinf(hi)) {
        IntegralResult r = integrate_semi_infinite(substituted, 0.0, piece_cfg);
        r.reach = t + std::pow(r.reach, inv_p);
        add(r);
        out.reach = r.reach;
      } else {
        add(integrate(substituted, 0.0, std::pow(hi - t, p), piece_cfg));
      }
    } else if (last && std::isinf(hi)) {
      IntegralResult r = integrate_semi_infinite(weighted, lo, piece_cfg);
      add(r);
      out.reach = r.reach;
    } else {
      add(integrate(weighted, lo, hi, piece_cfg));
    }
    lo = hi;
  }
  out.converged = out.converged && out.error_estimate <= target(cfg, out.value);
  return out;
}

}  // namespace fracprob
