#pragma once

#include <stdexcept>
#include <string>

namespace sixfold {

/// Argument outside the domain an operation is defined on (e.g. n < 5).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result or intermediate value does not fit the native 64-bit word.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Caller broke a documented precondition (sign/side mismatch, d > limit, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource budget (oracle sieve memory) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sixfold
