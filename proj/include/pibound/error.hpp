#pragma once

#include <stdexcept>
#include <string>

namespace pibound {

/// Argument outside the mathematical domain of an operation (x < 2, even x, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Query beyond the sieve limit of a PrimeTable.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Requested sieve limit exceeds the configured memory cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed or incompatible on-disk table cache.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pibound
