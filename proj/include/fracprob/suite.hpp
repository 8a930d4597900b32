#pragma once

#include <string>
#include <vector>

#include "fracprob/distributions.hpp"
#include "fracprob/kernels.hpp"
#include "fracprob/serialization.hpp"

namespace fracprob {

struct NamedModel {
  std::string name;
  DistributionModel model;
};

// Exp(1), Exp(2), Uniform(0,1), Weibull(2,1), hyperexp2(0.4,1,3),
// zero_inflated(0.3, Exp 1), deductible(1, Exp 1) and a small numeric table.
std::vector<NamedModel> default_catalog();

struct SuiteOptions {
  QuadratureConfig cfg;
  kernels::Exec exec = kernels::Exec::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<CheckResult> checks;
  int convergence_failures = 0;
};

inline constexpr int kCriterionCount = 13;

// One criterion in isolation. Criterion 13 run this way covers only its own
// tail checks.
CriterionResult run_criterion(int id, const SuiteOptions& opts = {});

// Criteria 1..13; the last one also counts ConvergenceErrors raised by 1..12.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts = {});

}  // namespace fracprob
