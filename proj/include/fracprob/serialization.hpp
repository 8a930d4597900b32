#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fracprob/distributions.hpp"
#include "fracprob/fracops.hpp"
#include "fracprob/taylor.hpp"

namespace fracprob {

using json = nlohmann::json;

// {"kind": "...", "params": {...}, "inner": {...}?}. Errors are InvalidParameter
// with a dotted path such as "inner.params.lambda".
DistributionSpec distribution_spec_from_json(const json& j);
json to_json(const DistributionSpec& s);

// [{"coef": a, "exp": b}, ...]
PowerSum power_sum_from_json(const json& j);
json to_json(const PowerSum& g);

// {lhs, terms[], remainder, residual, meta{alpha, n, g, distribution}}
json to_json(const TaylorReport& r, double alpha, int n, const PowerSum& g,
             const DistributionModel& x);

struct CheckResult {
  std::string check;
  json params = json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Anything a check wants to report beyond the fixed fields.
  json detail = json::object();
};

json to_json(const CheckResult& c);

// {header: {version, config}, results: [...]}
json make_report(const json& config, const std::vector<CheckResult>& results);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracprob
