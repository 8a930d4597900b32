#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fracprob {

// Base of every library error. The CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Γ evaluated at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A distribution or power-sum parameter failed validation.
class InvalidParameter : public DomainError {
 public:
  InvalidParameter(std::string field, std::string reason)
      : DomainError(field + ": " + reason), field_(std::move(field)), reason_(std::move(reason)) {}
  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An expectation or integral is infinite.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature hit its subdivision limit or the tail never stabilized.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The survival bounded order required by Z_alpha does not hold.
class OrderViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fracprob
