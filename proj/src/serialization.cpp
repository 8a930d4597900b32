#include "fracprob/serialization.hpp"

#include <cmath>

#include "fracprob/errors.hpp"

namespace fracprob {

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidParameter(join(path, key), "missing");
  }
  return obj.at(key);
}

double number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) throw InvalidParameter(join(path, key), "must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) throw InvalidParameter(join(path, key), "must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw InvalidParameter(join(path, key) + "[" + std::to_string(i) + "]", "must be a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

DistributionSpec parse_spec(const json& j, const std::string& path) {
  if (!j.is_object()) throw InvalidParameter(path.empty() ? "distribution" : path, "must be an object");
  const json& kind_node = require(j, "kind", path);
  if (!kind_node.is_string()) throw InvalidParameter(join(path, "kind"), "must be a string");
  const std::string kind = kind_node.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw InvalidParameter(join(path, "params"), "must be an object");
  const std::string pp = join(path, "params");

  auto inner = [&]() {
    return std::make_shared<const DistributionSpec>(parse_spec(require(j, "inner", path), join(path, "inner")));
  };

  DistributionSpec s;
  if (kind == "exponential") {
    if (params.contains("mean")) {
      const double mean = number(params, "mean", pp);
      if (!(mean > 0.0)) throw InvalidParameter(join(pp, "mean"), "must be positive");
      s.kind = spec::Exponential{1.0 / mean};
    } else {
      s.kind = spec::Exponential{number(params, "lambda", pp)};
    }
  } else if (kind == "uniform") {
    s.kind = spec::Uniform{number(params, "a", pp), number(params, "b", pp)};
  } else if (kind == "weibull") {
    s.kind = spec::Weibull{number(params, "k", pp), number(params, "lambda", pp)};
  } else if (kind == "hyperexp2") {
    s.kind = spec::HyperExp2{number(params, "p", pp), number(params, "lambda1", pp),
                             number(params, "lambda2", pp)};
  } else if (kind == "zero_inflated") {
    s.kind = spec::ZeroInflated{number(params, "p", pp), inner()};
  } else if (kind == "deductible") {
    s.kind = spec::Deductible{number(params, "d", pp), inner()};
  } else if (kind == "numeric") {
    s.kind = spec::Numeric{numbers(params, "t", pp), numbers(params, "survival", pp)};
  } else {
    throw InvalidParameter(join(path, "kind"), "unknown kind '" + kind + "'");
  }
  try {
    validate(s);
  } catch (const InvalidParameter& e) {
    throw InvalidParameter(join(pp, e.field()), e.reason());
  }
  return s;
}

}  // namespace

DistributionSpec distribution_spec_from_json(const json& j) { return parse_spec(j, ""); }

json to_json(const DistributionSpec& s) {
  json j;
  j["kind"] = s.kind_name();
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Exponential>) {
          j["params"] = {{"lambda", k.rate}};
        } else if constexpr (std::is_same_v<K, spec::Uniform>) {
          j["params"] = {{"a", k.lower}, {"b", k.upper}};
        } else if constexpr (std::is_same_v<K, spec::Weibull>) {
          j["params"] = {{"k", k.shape}, {"lambda", k.scale}};
        } else if constexpr (std::is_same_v<K, spec::HyperExp2>) {
          j["params"] = {{"p", k.p}, {"lambda1", k.rate1}, {"lambda2", k.rate2}};
        } else if constexpr (std::is_same_v<K, spec::ZeroInflated>) {
          j["params"] = {{"p", k.p}};
          j["inner"] = to_json(*k.inner);
        } else if constexpr (std::is_same_v<K, spec::Deductible>) {
          j["params"] = {{"d", k.d}};
          j["inner"] = to_json(*k.inner);
        } else {
          j["params"] = {{"t", k.t}, {"survival", k.survival}};
        }
      },
      s.kind);
  return j;
}

PowerSum power_sum_from_json(const json& j) {
  if (!j.is_array()) throw InvalidParameter("g", "must be an array of {\"coef\", \"exp\"}");
  std::vector<PowerTerm> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "g[" + std::to_string(i) + "]";
    terms.push_back({number(j[i], "coef", path), number(j[i], "exp", path)});
  }
  return PowerSum(std::move(terms));
}

json to_json(const PowerSum& g) {
  json j = json::array();
  for (const PowerTerm& t : g.terms()) j.push_back({{"coef", t.coef}, {"exp", t.exp}});
  return j;
}

json to_json(const TaylorReport& r, double alpha, int n, const PowerSum& g,
             const DistributionModel& x) {
  return {{"lhs", r.lhs},
          {"terms", r.terms},
          {"remainder", r.remainder},
          {"residual", r.residual},
          {"meta", {{"alpha", alpha}, {"n", n}, {"g", to_json(g)}, {"distribution", to_json(x.spec())}}}};
}

json to_json(const CheckResult& c) {
  json j = {{"check", c.check},         {"params", c.params},       {"lhs", c.lhs},
            {"rhs", c.rhs},             {"residual", c.residual},   {"tolerance", c.tolerance},
            {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json make_report(const json& config, const std::vector<CheckResult>& results) {
  json out = {{"header", {{"version", kVersion}, {"config", config}}}, {"results", json::array()}};
  for (const CheckResult& c : results) out["results"].push_back(to_json(c));
  return out;
}

}  // namespace fracprob
