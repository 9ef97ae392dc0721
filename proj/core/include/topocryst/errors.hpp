#pragma once

#include <stdexcept>
#include <string>

namespace topocryst {

/// Base class for all library-raised errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (QG files, lattice files). Carries a 1-based line
/// number when the offending line is known, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Structurally valid input that violates an operation's precondition
/// (degenerate lattice, wrong source block, unsupported dimension, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Iterative solver failed to reach the requested residuals.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double harmonic_residual,
                   double frame_residual)
      : Error(what),
        harmonic_residual_(harmonic_residual),
        frame_residual_(frame_residual) {}
  double harmonic_residual() const { return harmonic_residual_; }
  double frame_residual() const { return frame_residual_; }

 private:
  double harmonic_residual_ = 0;
  double frame_residual_ = 0;
};

}  // namespace topocryst
