#include "totdk/rational.hpp"

#include <ostream>

#include "totdk/errors.hpp"

namespace totdk {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!is_digits(text)) {
    throw DomainError("malformed integer '" + std::string(text) + "'");
  }
  Integer value{std::string(text)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational Rational::make(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("zero denominator");
  // cpp_rational removes common factors but expects q > 0.
  if (q.sign() < 0) return Rational(Value(Integer(-p), Integer(-q)));
  return Rational(Value(p, q));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return make(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }
Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_.is_zero(); }
bool Rational::is_integer() const { return boost::multiprecision::denominator(value_) == 1; }
int Rational::sign() const { return value_.sign(); }

std::string Rational::to_string() const {
  if (is_integer()) return totdk::to_string(numerator());
  return totdk::to_string(numerator()) + "/" + totdk::to_string(denominator());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer floor(const Rational& x) {
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num.sign() < 0) --q;
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

std::string to_string(const Integer& value) { return value.str(); }

}  // namespace totdk
