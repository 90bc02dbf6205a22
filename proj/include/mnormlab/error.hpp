#pragma once

#include <stdexcept>
#include <string>

namespace mnormlab {

/// Base of every error raised by the library. Each subclass maps to one
/// failure category so callers (and the CLI) can react per category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced a non-finite value at a sample point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds a configured memory/representation budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mnormlab
