#include "fracprob/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracprob/errors.hpp"

namespace fracprob {

namespace detail {

class DistributionImpl {
 public:
  explicit DistributionImpl(DistributionSpec spec) : spec_(std::move(spec)) {}
  virtual ~DistributionImpl() = default;

  virtual double survival(double t) const = 0;  // called with t ≥ 0
  virtual double density(double t) const = 0;
  virtual double support_upper() const { return kInfinity; }
  virtual std::optional<double> moment(double) const { return std::nullopt; }
  virtual std::optional<double> partial(double, double) const { return std::nullopt; }
  virtual std::string describe() const = 0;

  const DistributionSpec& spec() const { return spec_; }
  std::vector<Atom> atoms;
  std::vector<double> breakpoints;

 private:
  DistributionSpec spec_;
};

}  // namespace detail

namespace {

using detail::DistributionImpl;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// E[(X−t)_+^s] for X ~ Exp(rate), t ≥ 0, s > −1.
double exp_partial(double rate, double t, double s) {
  return std::exp(-rate * t) * gamma(s + 1.0) / std::pow(rate, s);
}

class Exponential final : public DistributionImpl {
 public:
  Exponential(DistributionSpec s, double rate) : DistributionImpl(std::move(s)), rate_(rate) {}
  double survival(double t) const override { return std::exp(-rate_ * t); }
  double density(double t) const override { return rate_ * std::exp(-rate_ * t); }
  std::optional<double> moment(double s) const override { return exp_partial(rate_, 0.0, s); }
  std::optional<double> partial(double t, double s) const override {
    return exp_partial(rate_, t, s);
  }
  std::string describe() const override { return "exponential(rate=" + fmt(rate_) + ")"; }

 private:
  double rate_;
};

class Uniform final : public DistributionImpl {
 public:
  Uniform(DistributionSpec s, double lo, double hi)
      : DistributionImpl(std::move(s)), lo_(lo), hi_(hi) {
    if (lo_ > 0.0) breakpoints.push_back(lo_);
  }
  double survival(double t) const override {
    if (t < lo_) return 1.0;
    if (t >= hi_) return 0.0;
    return (hi_ - t) / (hi_ - lo_);
  }
  double density(double t) const override {
    return (t >= lo_ && t <= hi_) ? 1.0 / (hi_ - lo_) : 0.0;
  }
  double support_upper() const override { return hi_; }
  std::optional<double> moment(double s) const override { return partial(0.0, s); }
  std::optional<double> partial(double t, double s) const override {
    if (t >= hi_) return 0.0;
    const double w = (s + 1.0) * (hi_ - lo_);
    const double top = std::pow(hi_ - t, s + 1.0);
    if (t >= lo_) return top / w;
    return (top - std::pow(lo_ - t, s + 1.0)) / w;
  }
  std::string describe() const override {
    return "uniform(" + fmt(lo_) + ", " + fmt(hi_) + ")";
  }

 private:
  double lo_, hi_;
};

class Weibull final : public DistributionImpl {
 public:
  Weibull(DistributionSpec s, double shape, double scale)
      : DistributionImpl(std::move(s)), k_(shape), scale_(scale) {}
  double survival(double t) const override { return std::exp(-std::pow(t / scale_, k_)); }
  double density(double t) const override {
    const double z = t / scale_;
    return k_ / scale_ * std::pow(z, k_ - 1.0) * std::exp(-std::pow(z, k_));
  }
  std::optional<double> moment(double s) const override {
    if (!(s > -k_)) return std::nullopt;
    return std::pow(scale_, s) * gamma(1.0 + s / k_);
  }
  // No elementary form for t > 0.
  std::optional<double> partial(double t, double s) const override {
    if (t == 0.0 && s > 0.0) return moment(s);
    return std::nullopt;
  }
  std::string describe() const override {
    return "weibull(shape=" + fmt(k_) + ", scale=" + fmt(scale_) + ")";
  }

 private:
  double k_, scale_;
};

class HyperExp2 final : public DistributionImpl {
 public:
  HyperExp2(DistributionSpec s, double p, double r1, double r2)
      : DistributionImpl(std::move(s)), p_(p), r1_(r1), r2_(r2) {}
  double survival(double t) const override {
    return p_ * std::exp(-r1_ * t) + (1.0 - p_) * std::exp(-r2_ * t);
  }
  double density(double t) const override {
    return p_ * r1_ * std::exp(-r1_ * t) + (1.0 - p_) * r2_ * std::exp(-r2_ * t);
  }
  std::optional<double> moment(double s) const override { return partial(0.0, s); }
  std::optional<double> partial(double t, double s) const override {
    return p_ * exp_partial(r1_, t, s) + (1.0 - p_) * exp_partial(r2_, t, s);
  }
  std::string describe() const override {
    return "hyperexp2(p=" + fmt(p_) + ", rate1=" + fmt(r1_) + ", rate2=" + fmt(r2_) + ")";
  }

 private:
  double p_, r1_, r2_;
};

class ZeroInflated final : public DistributionImpl {
 public:
  ZeroInflated(DistributionSpec s, double p, DistributionModel inner)
      : DistributionImpl(std::move(s)), p_(p), inner_(std::move(inner)) {
    atoms.push_back({0.0, p_});
    for (const Atom& a : inner_.atoms()) {
      if (a.location == 0.0) {
        atoms.front().mass += (1.0 - p_) * a.mass;
      } else {
        atoms.push_back({a.location, (1.0 - p_) * a.mass});
      }
    }
    breakpoints = inner_.breakpoints();
  }
  double survival(double t) const override { return (1.0 - p_) * inner_.survival(t); }
  double density(double t) const override { return (1.0 - p_) * inner_.density(t); }
  double support_upper() const override { return inner_.support_upper(); }
  std::optional<double> moment(double s) const override {
    if (!(s > 0.0)) return std::nullopt;
    auto m = inner_.closed_form_moment(s);
    if (!m) return std::nullopt;
    return (1.0 - p_) * *m;
  }
  // The atom at 0 never satisfies X − t > 0 for t ≥ 0.
  std::optional<double> partial(double t, double s) const override {
    auto m = inner_.closed_form_partial(t, s);
    if (!m) return std::nullopt;
    return (1.0 - p_) * *m;
  }
  std::string describe() const override {
    return "zero_inflated(p=" + fmt(p_) + ", " + inner_.describe() + ")";
  }

 private:
  double p_;
  DistributionModel inner_;
};

class Deductible final : public DistributionImpl {
 public:
  Deductible(DistributionSpec s, double d, DistributionModel inner)
      : DistributionImpl(std::move(s)), d_(d), inner_(std::move(inner)) {
    atoms.push_back({0.0, 1.0 - inner_.survival(d_)});
    for (const Atom& a : inner_.atoms()) {
      if (a.location > d_) atoms.push_back({a.location - d_, a.mass});
    }
    for (double b : inner_.breakpoints()) {
      if (b > d_) breakpoints.push_back(b - d_);
    }
  }
  double survival(double t) const override { return inner_.survival(d_ + t); }
  double density(double t) const override { return inner_.density(d_ + t); }
  double support_upper() const override { return inner_.support_upper() - d_; }
  std::optional<double> moment(double s) const override {
    if (!(s > 0.0)) return std::nullopt;
    return inner_.closed_form_partial(d_, s);
  }
  std::optional<double> partial(double t, double s) const override {
    return inner_.closed_form_partial(d_ + t, s);
  }
  std::string describe() const override {
    return "deductible(d=" + fmt(d_) + ", " + inner_.describe() + ")";
  }

 private:
  double d_;
  DistributionModel inner_;
};

class Numeric final : public DistributionImpl {
 public:
  Numeric(DistributionSpec s, std::vector<double> t, std::vector<double> sf)
      : DistributionImpl(std::move(s)), t_(std::move(t)), sf_(std::move(sf)) {
    if (t_.front() > 0.0) {
      t_.insert(t_.begin(), 0.0);
      sf_.insert(sf_.begin(), 1.0);
    }
    if (sf_.front() < 1.0) atoms.push_back({0.0, 1.0 - sf_.front()});
    const auto zero = std::find(sf_.begin(), sf_.end(), 0.0);
    if (zero != sf_.end()) {
      const auto keep = static_cast<std::size_t>(zero - sf_.begin()) + 1;
      t_.resize(keep);
      sf_.resize(keep);
      upper_ = t_.back();
    } else {
      const std::size_t k = t_.size() - 1;
      tail_rate_ = std::log(sf_[k - 1] / sf_[k]) / (t_[k] - t_[k - 1]);
      if (!(tail_rate_ > 0.0) || !std::isfinite(tail_rate_)) {
        throw InvalidParameter("survival", "last segment must strictly decrease");
      }
    }
    for (std::size_t i = 1; i < t_.size(); ++i) {
      if (t_[i] < upper_) breakpoints.push_back(t_[i]);
    }
  }
  double survival(double t) const override {
    if (t >= t_.back()) {
      if (std::isfinite(upper_)) return 0.0;
      return sf_.back() * std::exp(-tail_rate_ * (t - t_.back()));
    }
    const std::size_t i = segment(t);
    const double w = (t - t_[i]) / (t_[i + 1] - t_[i]);
    return sf_[i] + w * (sf_[i + 1] - sf_[i]);
  }
  double density(double t) const override {
    if (t < 0.0) return 0.0;
    if (t >= t_.back()) {
      return std::isfinite(upper_) ? 0.0 : tail_rate_ * survival(t);
    }
    const std::size_t i = segment(t);
    return (sf_[i] - sf_[i + 1]) / (t_[i + 1] - t_[i]);
  }
  double support_upper() const override { return upper_; }
  std::string describe() const override {
    return "numeric(" + std::to_string(t_.size()) + " knots)";
  }

 private:
  std::size_t segment(double t) const {
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - t_.begin() - 1, 0));
  }

  std::vector<double> t_, sf_;
  double upper_ = kInfinity;
  double tail_rate_ = 0.0;
};

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameter(field, "must be positive and finite");
}

void require_probability(double v, const char* field) {
  if (!(v > 0.0 && v < 1.0)) throw InvalidParameter(field, "must lie in (0, 1)");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string DistributionSpec::kind_name() const {
  return std::visit(
      overloaded{[](const spec::Exponential&) { return "exponential"; },
                 [](const spec::Uniform&) { return "uniform"; },
                 [](const spec::Weibull&) { return "weibull"; },
                 [](const spec::HyperExp2&) { return "hyperexp2"; },
                 [](const spec::ZeroInflated&) { return "zero_inflated"; },
                 [](const spec::Deductible&) { return "deductible"; },
                 [](const spec::Numeric&) { return "numeric"; }},
      kind);
}

void validate(const DistributionSpec& s) {
  std::visit(
      overloaded{
          [](const spec::Exponential& e) { require_positive(e.rate, "lambda"); },
          [](const spec::Uniform& u) {
            if (!(u.lower >= 0.0) || !std::isfinite(u.lower)) {
              throw InvalidParameter("a", "must be finite and nonnegative");
            }
            if (!(u.upper > u.lower) || !std::isfinite(u.upper)) {
              throw InvalidParameter("b", "must be finite and exceed a");
            }
          },
          [](const spec::Weibull& w) {
            require_positive(w.shape, "k");
            require_positive(w.scale, "lambda");
          },
          [](const spec::HyperExp2& h) {
            require_probability(h.p, "p");
            require_positive(h.rate1, "lambda1");
            require_positive(h.rate2, "lambda2");
          },
          [](const spec::ZeroInflated& z) {
            require_probability(z.p, "p");
            if (!z.inner) throw InvalidParameter("inner", "missing");
            validate(*z.inner);
          },
          [](const spec::Deductible& d) {
            require_positive(d.d, "d");
            if (!d.inner) throw InvalidParameter("inner", "missing");
            validate(*d.inner);
          },
          [](const spec::Numeric& n) {
            if (n.t.size() != n.survival.size()) {
              throw InvalidParameter("survival", "must have one value per knot");
            }
            if (n.t.size() < 2) throw InvalidParameter("t", "need at least two knots");
            for (std::size_t i = 0; i < n.t.size(); ++i) {
              if (!std::isfinite(n.t[i]) || n.t[i] < 0.0) {
                throw InvalidParameter("t", "knots must be finite and nonnegative");
              }
              if (i > 0 && !(n.t[i] > n.t[i - 1])) {
                throw InvalidParameter("t", "knots must be strictly increasing");
              }
              if (!(n.survival[i] >= 0.0 && n.survival[i] <= 1.0)) {
                throw InvalidParameter("survival", "values must lie in [0, 1]");
              }
              if (i > 0 && n.survival[i] > n.survival[i - 1]) {
                throw InvalidParameter("survival", "values must be nonincreasing");
              }
            }
          },
      },
      s.kind);
}

DistributionModel::DistributionModel(std::shared_ptr<const detail::DistributionImpl> impl)
    : impl_(std::move(impl)) {}

double DistributionModel::survival(double t) const { return t < 0.0 ? 1.0 : impl_->survival(t); }
const std::vector<Atom>& DistributionModel::atoms() const { return impl_->atoms; }
double DistributionModel::atom_mass_at_zero() const {
  double m = 0.0;
  for (const Atom& a : impl_->atoms) {
    if (a.location == 0.0) m += a.mass;
  }
  return m;
}
double DistributionModel::support_upper() const { return impl_->support_upper(); }
const std::vector<double>& DistributionModel::breakpoints() const { return impl_->breakpoints; }
bool DistributionModel::has_density() const { return true; }
double DistributionModel::density(double t) const { return t < 0.0 ? 0.0 : impl_->density(t); }
std::optional<double> DistributionModel::closed_form_moment(double s) const {
  return impl_->moment(s);
}
std::optional<double> DistributionModel::closed_form_partial(double t, double s) const {
  return impl_->partial(t, s);
}
const DistributionSpec& DistributionModel::spec() const { return impl_->spec(); }
std::string DistributionModel::describe() const { return impl_->describe(); }

DistributionModel build(const DistributionSpec& s) {
  validate(s);
  std::shared_ptr<const DistributionImpl> impl = std::visit(
      overloaded{
          [&](const spec::Exponential& e) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<Exponential>(s, e.rate);
          },
          [&](const spec::Uniform& u) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<Uniform>(s, u.lower, u.upper);
          },
          [&](const spec::Weibull& w) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<Weibull>(s, w.shape, w.scale);
          },
          [&](const spec::HyperExp2& h) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<HyperExp2>(s, h.p, h.rate1, h.rate2);
          },
          [&](const spec::ZeroInflated& z) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<ZeroInflated>(s, z.p, build(*z.inner));
          },
          [&](const spec::Deductible& d) -> std::shared_ptr<const DistributionImpl> {
            DistributionModel inner = build(*d.inner);
            if (!(d.d < inner.support_upper())) {
              throw InvalidParameter("d", "must lie below the upper support endpoint");
            }
            return std::make_shared<Deductible>(s, d.d, std::move(inner));
          },
          [&](const spec::Numeric& n) -> std::shared_ptr<const DistributionImpl> {
            return std::make_shared<Numeric>(s, n.t, n.survival);
          },
      },
      s.kind);
  return DistributionModel(std::move(impl));
}

namespace catalog {

DistributionModel exponential(double rate) { return build({spec::Exponential{rate}}); }
DistributionModel exponential_mean(double mean) {
  require_positive(mean, "mean");
  return exponential(1.0 / mean);
}
DistributionModel uniform(double lower, double upper) {
  return build({spec::Uniform{lower, upper}});
}
DistributionModel weibull(double shape, double scale) {
  return build({spec::Weibull{shape, scale}});
}
DistributionModel hyperexp2(double p, double rate1, double rate2) {
  return build({spec::HyperExp2{p, rate1, rate2}});
}
DistributionModel zero_inflated(double p, const DistributionModel& inner) {
  return build({spec::ZeroInflated{p, std::make_shared<const DistributionSpec>(inner.spec())}});
}
DistributionModel deductible(double d, const DistributionModel& inner) {
  return build({spec::Deductible{d, std::make_shared<const DistributionSpec>(inner.spec())}});
}
DistributionModel numeric(std::vector<double> t, std::vector<double> survival) {
  return build({spec::Numeric{std::move(t), std::move(survival)}});
}

}  // namespace catalog

namespace {

double finite_or_diverge(double v, const char* what) {
  if (!std::isfinite(v)) throw DivergenceError(std::string(what) + " is infinite");
  return v;
}

}  // namespace

double fractional_moment(const DistributionModel& x, double s, Method method,
                         const QuadratureConfig& cfg) {
  if (!(s > -1.0)) throw DomainError("fractional_moment: order must exceed -1");
  if (s == 0.0) return 1.0;
  if (s < 0.0 && x.atom_mass_at_zero() > 0.0) {
    throw DivergenceError("fractional_moment: E[X^s] with s < 0 is infinite under an atom at 0");
  }
  if (method == Method::automatic) {
    if (auto m = x.closed_form_moment(s)) return finite_or_diverge(*m, "E[X^s]");
  }
  if (s > 0.0) return upper_partial_moment(x, 0.0, s, Method::quadrature, cfg);
  const RealFn f = [&x](double y) { return x.density(y); };
  double v = checked(integrate_weighted(f, 0.0, s + 1.0, x.support_upper(), x.breakpoints(), cfg),
                     "fractional_moment");
  for (const Atom& a : x.atoms()) v += a.mass * std::pow(a.location, s);
  return finite_or_diverge(v, "E[X^s]");
}

double upper_partial_moment(const DistributionModel& x, double t, double s, Method method,
                            const QuadratureConfig& cfg) {
  if (!(t >= 0.0)) throw DomainError("upper_partial_moment: t must be nonnegative");
  if (!(s > -1.0)) throw DomainError("upper_partial_moment: order must exceed -1");
  const double b = x.support_upper();
  if (t >= b) return 0.0;
  if (s == 0.0) return x.survival(t);
  if (s < 0.0) {
    for (const Atom& a : x.atoms()) {
      if (a.location > t) {
        throw DomainError("upper_partial_moment: negative order with an atom above t");
      }
    }
  }
  if (method == Method::automatic) {
    if (auto m = x.closed_form_partial(t, s)) return finite_or_diverge(*m, "E[(X-t)_+^s]");
  }
  if (s > 0.0) {
    const RealFn sf = [&x](double y) { return x.survival(y); };
    const double v = checked(integrate_weighted(sf, t, s, b, x.breakpoints(), cfg),
                             "upper_partial_moment");
    return finite_or_diverge(s * v, "E[(X-t)_+^s]");
  }
  const RealFn f = [&x](double y) { return x.density(y); };
  const double v =
      checked(integrate_weighted(f, t, s + 1.0, b, x.breakpoints(), cfg), "upper_partial_moment");
  return finite_or_diverge(v, "E[(X-t)_+^s]");
}

double survival_at(const DistributionModel& x, double t) { return x.survival(t); }

std::pair<double, double> support_interval(const DistributionModel& x) {
  return {0.0, x.support_upper()};
}

double quantile(const DistributionModel& x, double prob) {
  if (!(prob > 0.0 && prob < 1.0)) throw DomainError("quantile: prob must lie in (0, 1)");
  const double target = 1.0 - prob;
  if (x.survival(0.0) <= target) return 0.0;
  double lo = 0.0;
  double hi = std::isfinite(x.support_upper()) ? x.support_upper() : 1.0;
  while (x.survival(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw DivergenceError("quantile: survival does not reach the target");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (x.survival(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace fracprob
