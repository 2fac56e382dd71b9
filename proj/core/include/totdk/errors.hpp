#pragma once

#include <stdexcept>
#include <string>

namespace totdk {

/// Argument outside the mathematical domain of an operation (n = 0, zero
/// denominator, n = 1 where the theorem needs n > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource bound (enumeration or naive Dedekind bound) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal invariant failed. Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace totdk

namespace totdk {

/// Malformed or out-of-range command-line input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two evaluators that must agree produced different values.
class CorrectnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace totdk
