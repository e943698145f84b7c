#pragma once

#include <stdexcept>
#include <string>

namespace fracspec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Iterative numerical procedure (quadrature, eigensolver) failed to reach
/// its tolerance within the allotted budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracspec
