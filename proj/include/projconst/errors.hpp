#pragma once

#include <stdexcept>
#include <string>

namespace projconst {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure (root polish, eigen solve) did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// A quadrature could not reach the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_(achieved), requested_(requested) {}
  double achieved() const noexcept { return achieved_; }
  double requested() const noexcept { return requested_; }

 private:
  double achieved_;
  double requested_;
};

/// An exact integer or a floating exponentiation exceeded its representable range.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, int required_bits)
      : std::overflow_error(what), required_bits_(required_bits) {}
  int required_bits() const noexcept { return required_bits_; }

 private:
  int required_bits_;
};

/// Valid arguments, but a combination the implementation does not provide.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace projconst
