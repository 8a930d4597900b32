#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracprob/serialization.hpp"

namespace fracprob {

struct Outcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool pass = false;
  json detail = json::object();
};

Outcome absolute_outcome(double lhs, double rhs, double tol);
Outcome relative_outcome(double lhs, double rhs, double tol);

// Appends one CheckResult per run(). An exception fails the check it came
// from and is recorded in `detail`; ConvergenceErrors are also counted.
class CheckRunner {
 public:
  explicit CheckRunner(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& check, json params, double tol, const std::function<Outcome()>& fn);
  void skip() { ++skipped_; }

  int skipped() const { return skipped_; }
  int convergence_failures() const { return nonconverged_; }

 private:
  std::vector<CheckResult>& out_;
  int skipped_ = 0;
  int nonconverged_ = 0;
};

}  // namespace fracprob
