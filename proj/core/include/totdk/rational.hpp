#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace totdk {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  // NOLINTBEGIN(google-explicit-constructor)
  Rational(Integer value) : value_(std::move(value)) {}
  Rational(std::int64_t value) : value_(value) {}
  Rational(std::uint64_t value) : value_(value) {}
  Rational(int value) : value_(value) {}
  // NOLINTEND(google-explicit-constructor)

  /// p/q reduced. Throws DomainError("zero denominator") if q == 0.
  static Rational make(const Integer& p, const Integer& q);

  /// Parses "p/q" or "p" (optional leading '-'). Throws DomainError on
  /// malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value value) : value_(std::move(value)) {}

  Value value_;
};

/// Largest integer <= x.
Integer floor(const Rational& x);

/// x - floor(x); always in [0, 1).
Rational frac(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Integer rendering without going through iostreams.
std::string to_string(const Integer& value);

}  // namespace totdk
