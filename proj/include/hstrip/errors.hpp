#pragma once

#include <stdexcept>
#include <string>

namespace hstrip {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Jacobi ratio whose denominator function vanishes at the requested point.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solve that did not meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace hstrip
