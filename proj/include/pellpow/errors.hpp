#pragma once

#include <stdexcept>
#include <string>

namespace pellpow {

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certified computation could not be decided at the available precision.
/// Callers may retry with more bits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Baker-Davenport reduction found no usable convergent within its attempt budget.
class ReductionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pellpow
