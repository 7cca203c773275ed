#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aqc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent arguments (dimension mismatch, bad index, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Problem exceeds a brute-force or dense-storage bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A perturbative denominator vanished.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The landscape has no usable structure (e.g. no strict minima at all).
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Iterative eigensolver gave up; carries the best residuals reached.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> residuals)
      : Error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace aqc
