#include "totdk/spence.hpp"

#include <string>
#include <utility>

#include "totdk/dedekind.hpp"
#include "totdk/errors.hpp"
#include "wide.hpp"

namespace totdk {

using detail::i128;

namespace {

void require_theorem_range(std::uint64_t n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": theorem requires n > 1");
}

Integer power_of_two(unsigned e) { return Integer(1) << e; }

Integer signed_power(unsigned omega_value) { return omega_value % 2 == 0 ? Integer(1) : Integer(-1); }

Integer exact_quotient(const Integer& numer, unsigned divisor, const char* what) {
  if (numer % divisor != 0) {
    throw InvariantViolation(std::string(what) + ": numerator " + to_string(numer) + " not divisible by " +
                             std::to_string(divisor));
  }
  return numer / divisor;
}

}  // namespace

Modulus::Modulus(std::uint64_t n) : Modulus(factorize(n)) {}

Modulus::Modulus(Factorization factors)
    : n_(factors.value()),
      factors_(std::move(factors)),
      totient_(totdk::totient(factors_)),
      omega_(totdk::omega(factors_)),
      radical_(totdk::radical(factors_)),
      signed_divisors_(totdk::signed_divisors(factors_)) {}

IdentityResult IdentityResult::compare(std::uint64_t n, std::string identity, Rational lhs, Rational rhs) {
  const bool matched = lhs == rhs;
  return {n, std::move(identity), std::move(lhs), std::move(rhs), matched, {}};
}

Integer theta(const Modulus& n, const Rational& x) {
  Integer total;
  for (const auto& [d, mu] : n.signed_divisors()) {
    const Integer f = floor(x / Rational(d));
    total += mu > 0 ? f : Integer(-f);
  }
  return total;
}

Integer theta(std::uint64_t n, const Rational& x) { return theta(Modulus(n), x); }

Rational nu(const Modulus& n, const Rational& x) {
  Rational total;
  for (const auto& [d, mu] : n.signed_divisors()) {
    const Rational f = frac(x / Rational(d));
    total += mu > 0 ? f : -f;
  }
  return total;
}

Rational nu(std::uint64_t n, const Rational& x) { return nu(Modulus(n), x); }

Integer sum_j_aj_bruteforce(const TotativeSet& totatives) {
  require_theorem_range(totatives.n, "sum_j_aj_bruteforce");
  detail::Accumulator acc;
  const auto& members = totatives.members;
  for (std::size_t j = 0; j < members.size(); ++j) {
    acc.add(detail::checked_mul(static_cast<i128>(j + 1), static_cast<i128>(members[j])));
  }
  return acc.value();
}

Integer sum_j_aj_bruteforce(std::uint64_t n, const Limits& limits) {
  require_theorem_range(n, "sum_j_aj_bruteforce");
  return sum_j_aj_bruteforce(totatives(n, limits));
}

Integer spence_numerator(const Modulus& n) {
  const Integer big_n(n.n());
  const Integer phi(n.totient());
  // m and omega(m) are taken from the factorization of m itself.
  const Factorization m_factors = factorize(n.radical());
  const unsigned omega_m = omega(m_factors);
  const Integer phi_m(totient(m_factors));
  return phi * (8 * big_n * phi + 6 * big_n + 2 * phi_m * signed_power(omega_m) - power_of_two(omega_m));
}

Integer spence_closed_form(const Modulus& n) {
  require_theorem_range(n.n(), "spence_closed_form");
  return exact_quotient(spence_numerator(n), 24, "spence_closed_form");
}

Integer spence_closed_form(std::uint64_t n) {
  require_theorem_range(n, "spence_closed_form");
  return spence_closed_form(Modulus(n));
}

Integer sum_squares_closed_form(const Modulus& n) {
  require_theorem_range(n.n(), "sum_squares_closed_form");
  const Integer big_n(n.n());
  const Integer numer =
      Integer(n.totient()) * (2 * big_n * big_n + Integer(n.radical()) * signed_power(n.omega()));
  return exact_quotient(numer, 6, "sum_squares_closed_form");
}

Integer sum_squares_closed_form(std::uint64_t n) {
  require_theorem_range(n, "sum_squares_closed_form");
  return sum_squares_closed_form(Modulus(n));
}

Integer sum_squares_bruteforce(const TotativeSet& totatives) {
  require_theorem_range(totatives.n, "sum_squares_bruteforce");
  detail::Accumulator acc;
  for (std::uint64_t a : totatives.members) {
    acc.add(detail::checked_mul(static_cast<i128>(a), static_cast<i128>(a)));
  }
  return acc.value();
}

Integer sum_squares_bruteforce(std::uint64_t n, const Limits& limits) {
  require_theorem_range(n, "sum_squares_bruteforce");
  return sum_squares_bruteforce(totatives(n, limits));
}

Integer theta_weighted_sum(const Modulus& n, const TotativeSet& totatives) {
  detail::Accumulator acc;
  const auto& divisors = n.signed_divisors();
  for (std::uint64_t a : totatives.members) {
    // a >= 0, so floor(a/d) is integer division.
    i128 t = 0;
    for (const auto& [d, mu] : divisors) t += mu * static_cast<i128>(a / d);
    acc.add(detail::checked_mul(t, static_cast<i128>(a)));
  }
  return acc.value();
}

Rational nu_weighted_sum_bruteforce(const Modulus& n, const TotativeSet& totatives) {
  require_theorem_range(n.n(), "nu_weighted_sum_bruteforce");
  // n nu_n(a) = sum_{d|n} mu(d) (a mod d) (n/d) is an integer.
  detail::Accumulator acc;
  const auto& divisors = n.signed_divisors();
  for (std::uint64_t a : totatives.members) {
    i128 scaled_nu = 0;
    for (const auto& [d, mu] : divisors) {
      scaled_nu += mu * detail::checked_mul(static_cast<i128>(a % d), static_cast<i128>(n.n() / d));
    }
    acc.add(detail::checked_mul(scaled_nu, static_cast<i128>(a)));
  }
  return Rational::make(acc.value(), Integer(n.n()));
}

Rational nu_weighted_sum_bruteforce(std::uint64_t n, const Limits& limits) {
  require_theorem_range(n, "nu_weighted_sum_bruteforce");
  const Modulus mod(n);
  return nu_weighted_sum_bruteforce(mod, totatives(mod.factors(), limits));
}

Rational mobius_transform_sum(std::uint64_t n, const ArithmeticFunction& f) {
  const Modulus mod(n);
  Rational total;
  for (const auto& [d, mu] : mod.signed_divisors()) {
    Rational inner;
    for (std::uint64_t k = 1; k <= n / d; ++k) inner += f(d * k);
    total += mu > 0 ? inner : -inner;
  }
  return total;
}

Rational s_double_sum(const Modulus& n) {
  require_theorem_range(n.n(), "s_double_sum");
  Rational total;
  for (const auto& [d1, mu1] : n.signed_divisors()) {
    for (const auto& [d2, mu2] : n.signed_divisors()) {
      const Rational s = dedekind_fast(n.n() / d1, n.n() / d2);
      total += mu1 * mu2 > 0 ? s : -s;
    }
  }
  return total * Rational(n.n());
}

Rational s_double_sum(std::uint64_t n) {
  require_theorem_range(n, "s_double_sum");
  return s_double_sum(Modulus(n));
}

Rational s_closed_form(const Modulus& n) {
  require_theorem_range(n.n(), "s_closed_form");
  const Integer phi_m(totient(n.radical()));
  return Rational::make(Integer(n.totient()) * (2 * signed_power(n.omega()) * phi_m + power_of_two(n.omega())), 24);
}

Rational s_closed_form(std::uint64_t n) {
  require_theorem_range(n, "s_closed_form");
  return s_closed_form(Modulus(n));
}

Rational delange_double_sum(const Modulus& n) {
  // Every term shares the denominator n^2.
  Integer numer;
  for (const auto& [d1, mu1] : n.signed_divisors()) {
    for (const auto& [d2, mu2] : n.signed_divisors()) {
      const Integer g(gcd(n.n() / d1, n.n() / d2));
      const Integer term = Integer(d1) * d2 * g * g;
      numer += mu1 * mu2 > 0 ? term : Integer(-term);
    }
  }
  return Rational::make(numer, Integer(n.n()) * n.n());
}

Rational delange_double_sum(std::uint64_t n) { return delange_double_sum(Modulus(n)); }

Rational delange_closed_form(const Modulus& n) {
  return Rational::make(power_of_two(n.omega()) * n.totient(), Integer(n.n()));
}

Rational delange_closed_form(std::uint64_t n) { return delange_closed_form(Modulus(n)); }

std::vector<IdentityResult> verify_chain(const Modulus& n, const Limits& limits) {
  require_theorem_range(n.n(), "verify_chain");
  const std::uint64_t value = n.n();
  const TotativeSet units = totatives(n.factors(), limits);
  const Rational phi_over_n = Rational::make(n.totient(), value);

  const Integer sum_jaj = sum_j_aj_bruteforce(units);
  const Integer theta_sum = theta_weighted_sum(n, units);
  const Integer squares = sum_squares_bruteforce(units);
  const Integer squares_closed = sum_squares_closed_form(n);
  const Rational nu_sum = nu_weighted_sum_bruteforce(n, units);
  const Rational s_direct = s_double_sum(n);
  const Rational s_closed = s_closed_form(n);
  const Integer spence = spence_closed_form(n);
  const Rational quarter_n_phi = Rational::make(Integer(value) * n.totient(), 4);

  const std::uint64_t m = n.radical();
  const Factorization m_factors = factorize(m);

  std::vector<IdentityResult> out;
  out.reserve(10);
  out.push_back(IdentityResult::compare(value, identity::kSumJajTheta, sum_jaj, theta_sum));
  out.push_back(IdentityResult::compare(value, identity::kThetaNuSplit, theta_sum,
                                        phi_over_n * Rational(squares) - nu_sum));
  out.push_back(IdentityResult::compare(value, identity::kSumSquares, squares, squares_closed));
  out.push_back(IdentityResult::compare(value, identity::kNuWeightedSum, nu_sum, -quarter_n_phi + s_direct));
  out.push_back(IdentityResult::compare(value, identity::kSClosedForm, s_direct, s_closed));
  out.push_back(IdentityResult::compare(value, identity::kDelange, delange_double_sum(n), delange_closed_form(n)));
  out.push_back(IdentityResult::compare(value, identity::kSquareFreeRatio, phi_over_n,
                                        Rational::make(totient(m_factors), m)));
  out.push_back(IdentityResult::compare(value, identity::kOmegaSquareFree, power_of_two(n.omega()),
                                        power_of_two(omega(m_factors))));
  out.push_back(IdentityResult::compare(value, identity::kSubstitution,
                                        phi_over_n * Rational(squares_closed) + quarter_n_phi - s_closed, spence));
  out.push_back(IdentityResult::compare(value, identity::kSpence, sum_jaj, spence));
  return out;
}

std::vector<IdentityResult> verify_chain(std::uint64_t n, const Limits& limits) {
  require_theorem_range(n, "verify_chain");
  return verify_chain(Modulus(n), limits);
}

}  // namespace totdk
