#pragma once

#include <stdexcept>
#include <string>

namespace laumon {

/// Caller passed arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Division by the zero element of the fraction field.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// A rational function could not be evaluated at the requested point.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// A torus weight is trivial, so the fixed point is not isolated.
class DegeneracyError : public std::domain_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace laumon
