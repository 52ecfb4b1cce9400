#pragma once

#include <stdexcept>
#include <string>

namespace swcurve {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Bad or inconsistent input data (malformed files, invalid parameters,
/// violated preconditions that are the caller's responsibility).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

/// A numerical procedure failed (singular system, quadrature that did not
/// converge within its budget).
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& message) : Error(message) {}
};

/// Matrix singular to working precision. Carries the magnitude of the pivot
/// that triggered the failure.
class SingularMatrixError : public SolverError {
 public:
  SingularMatrixError(const std::string& message, double pivot_magnitude)
      : SolverError(message), pivot_magnitude_(pivot_magnitude) {}
  double pivot_magnitude() const { return pivot_magnitude_; }

 private:
  double pivot_magnitude_;
};

/// Adaptive quadrature exceeded its panel budget. Carries the best estimate
/// reached and the associated error bound.
class QuadratureError : public SolverError {
 public:
  QuadratureError(const std::string& message, double best_estimate, double error_bound)
      : SolverError(message), best_estimate_(best_estimate), error_bound_(error_bound) {}
  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

/// Requested an operation outside the supported combination of inputs.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message) : Error(message) {}
};

}  // namespace swcurve
