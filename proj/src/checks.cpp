#include "fracprob/checks.hpp"

#include <algorithm>
#include <cmath>

#include "fracprob/errors.hpp"

namespace fracprob {

Outcome absolute_outcome(double lhs, double rhs, double tol) {
  const double r = std::abs(lhs - rhs);
  return {lhs, rhs, r, r <= tol};
}

Outcome relative_outcome(double lhs, double rhs, double tol) {
  const double r = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  return {lhs, rhs, r, r <= tol};
}

void CheckRunner::run(const std::string& check, json params, double tol,
                      const std::function<Outcome()>& fn) {
  CheckResult c;
  c.check = check;
  c.params = std::move(params);
  c.tolerance = tol;
  try {
    Outcome o = fn();
    c.lhs = o.lhs;
    c.rhs = o.rhs;
    c.residual = o.residual;
    c.pass = o.pass;
    c.detail = std::move(o.detail);
  } catch (const ConvergenceError& e) {
    ++nonconverged_;
    c.residual = kInfinity;
    c.detail = {{"error", "ConvergenceError"}, {"message", e.what()}};
  } catch (const OrderViolation& e) {
    c.residual = kInfinity;
    c.detail = {{"error", "OrderViolation"}, {"message", e.what()}};
  } catch (const DivergenceError& e) {
    c.residual = kInfinity;
    c.detail = {{"error", "DivergenceError"}, {"message", e.what()}};
  } catch (const DomainError& e) {
    c.residual = kInfinity;
    c.detail = {{"error", "DomainError"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    c.residual = kInfinity;
    c.detail = {{"error", "exception"}, {"message", e.what()}};
  }
  out_.push_back(std::move(c));
}

}  // namespace fracprob
