#pragma once

#include <stdexcept>
#include <string>

namespace grv {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole (non-positive integer for gamma/digamma).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Requested derivative/polygamma order beyond the supported cap.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integrand (or finite-difference target) returned NaN/inf at an interior node.
class NonFiniteSampleError : public std::runtime_error {
 public:
  NonFiniteSampleError(double where, double value);
  double where() const noexcept { return where_; }
  double value() const noexcept { return value_; }

 private:
  double where_;
  double value_;
};

class UnknownIdError : public std::out_of_range {
 public:
  UnknownIdError(const std::string& id, const std::string& suggestions);
  const std::string& suggestions() const noexcept { return suggestions_; }

 private:
  std::string suggestions_;
};

class InfeasibleDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter assignment violates the owning entry's domain.
class OutOfDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace grv
