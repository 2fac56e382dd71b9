#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "totdk/arith.hpp"
#include "totdk/limits.hpp"
#include "totdk/rational.hpp"

namespace totdk {

/// Arithmetic data of one modulus n, computed once and shared by every
/// identity evaluated at n.
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);
  explicit Modulus(Factorization factors);

  std::uint64_t n() const { return n_; }
  const Factorization& factors() const { return factors_; }
  std::uint64_t totient() const { return totient_; }
  unsigned omega() const { return omega_; }
  /// The square-free part m.
  std::uint64_t radical() const { return radical_; }
  const std::vector<SignedDivisor>& signed_divisors() const { return signed_divisors_; }

 private:
  std::uint64_t n_;
  Factorization factors_;
  std::uint64_t totient_;
  unsigned omega_;
  std::uint64_t radical_;
  std::vector<SignedDivisor> signed_divisors_;
};

/// lhs/rhs of one identity at one n.
struct IdentityResult {
  std::uint64_t n = 0;
  std::string identity;
  Rational lhs;
  Rational rhs;
  bool matched = false;
  /// Empty unless the identity could not be evaluated ("overflow", "resource", ...).
  std::string reason;

  static IdentityResult compare(std::uint64_t n, std::string identity, Rational lhs, Rational rhs);
};

/// theta_n(x) = sum_{d|n} mu(d) floor(x/d). For x >= 0 it counts the
/// integers 1 <= k <= x coprime to n.
Integer theta(const Modulus& n, const Rational& x);
Integer theta(std::uint64_t n, const Rational& x);

/// nu_n(x) = sum_{d|n} mu(d) frac(x/d).
Rational nu(const Modulus& n, const Rational& x);
Rational nu(std::uint64_t n, const Rational& x);

/// sum_{j=1..phi(n)} j a_j over the ascending totatives. Throws DomainError
/// for n < 2 and ResourceError above the enumeration bound.
Integer sum_j_aj_bruteforce(std::uint64_t n, const Limits& limits = {});
Integer sum_j_aj_bruteforce(const TotativeSet& totatives);

/// phi(n) (8 n phi(n) + 6n + 2 phi(m) (-1)^omega(m) - 2^omega(m)), before the
/// division by 24.
Integer spence_numerator(const Modulus& n);

/// sum_{j} j a_j in closed form. Throws DomainError for n < 2 and
/// InvariantViolation if the numerator is not divisible by 24.
Integer spence_closed_form(const Modulus& n);
Integer spence_closed_form(std::uint64_t n);

/// phi(n) / 6 * (2 n^2 + m (-1)^omega(m)), with integrality asserted.
Integer sum_squares_closed_form(const Modulus& n);
Integer sum_squares_closed_form(std::uint64_t n);
/// sum of a^2 over U(n).
Integer sum_squares_bruteforce(const TotativeSet& totatives);
Integer sum_squares_bruteforce(std::uint64_t n, const Limits& limits = {});

/// sum_{a in U(n)} theta_n(a) a.
Integer theta_weighted_sum(const Modulus& n, const TotativeSet& totatives);

/// sum_{a in U(n)} nu_n(a) a.
Rational nu_weighted_sum_bruteforce(const Modulus& n, const TotativeSet& totatives);
Rational nu_weighted_sum_bruteforce(std::uint64_t n, const Limits& limits = {});

using ArithmeticFunction = std::function<Rational(std::uint64_t)>;

/// sum_{d|n} mu(d) sum_{k=1..n/d} f(dk), which equals the sum of f over U(n).
Rational mobius_transform_sum(std::uint64_t n, const ArithmeticFunction& f);

/// S(n) = n sum_{d1|n} sum_{d2|n} mu(d1) mu(d2) s(n/d1, n/d2).
Rational s_double_sum(const Modulus& n);
Rational s_double_sum(std::uint64_t n);

/// phi(n) / 24 * (2 (-1)^omega(m) phi(m) + 2^omega(n)).
Rational s_closed_form(const Modulus& n);
Rational s_closed_form(std::uint64_t n);

/// sum_{d1|n} sum_{d2|n} mu(d1) mu(d2) (d1 d2 / n^2) gcd(n/d1, n/d2)^2.
Rational delange_double_sum(const Modulus& n);
Rational delange_double_sum(std::uint64_t n);

/// 2^omega(n) phi(n) / n.
Rational delange_closed_form(const Modulus& n);
Rational delange_closed_form(std::uint64_t n);

/// Identity names reported by verify_chain, in evaluation order.
namespace identity {
inline constexpr const char* kSumJajTheta = "sum_jaj_theta_form";
inline constexpr const char* kThetaNuSplit = "theta_nu_split";
inline constexpr const char* kSumSquares = "sum_squares";
inline constexpr const char* kNuWeightedSum = "nu_weighted_sum";
inline constexpr const char* kSClosedForm = "s_closed_form";
inline constexpr const char* kDelange = "delange";
inline constexpr const char* kSquareFreeRatio = "square_free_ratio";
inline constexpr const char* kOmegaSquareFree = "omega_square_free";
inline constexpr const char* kSubstitution = "substitution";
inline constexpr const char* kSpence = "spence";
}  // namespace identity

/// Evaluates both sides of every link of the Spence derivation at n and
/// reports each link separately. U(n) is enumerated once.
std::vector<IdentityResult> verify_chain(const Modulus& n, const Limits& limits = {});
std::vector<IdentityResult> verify_chain(std::uint64_t n, const Limits& limits = {});

}  // namespace totdk
