#pragma once

#include <stdexcept>
#include <string>

namespace akp {

// Input outside an operation's mathematical domain (exit code 2 at the CLI).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Result would leave the exact-arithmetic range.
class OverflowError : public DomainError {
 public:
  explicit OverflowError(const std::string& what) : DomainError(what) {}
};

// Enumeration, quadrature or wall-clock budget exceeded (exit code 3).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical procedure failed to reach its tolerance.
class ConvergenceError : public BudgetError {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : BudgetError(what + " (achieved " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace akp
