#pragma once

#include <cstdint>
#include <vector>

#include "totdk/limits.hpp"

namespace totdk {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;
  /// Throws InvariantViolation if `factors` is not canonical.
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  /// Product of prime^exponent. Throws OverflowError past 64 bits.
  std::uint64_t value() const;
  bool empty() const { return factors_.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// A square-free divisor d of n together with mu(d) = +-1. Divisors with
/// mu(d) = 0 contribute nothing to any Moebius-weighted sum and are omitted.
struct SignedDivisor {
  std::uint64_t divisor = 0;
  int mu = 0;
};

/// Trial division with a 2-3-5 wheel. Throws DomainError for n = 0.
Factorization factorize(std::uint64_t n);

/// Smallest-prime-factor table for bulk factorization of 1..limit.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint32_t limit);

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  /// Throws DomainError for n = 0 or n > limit().
  Factorization factorize(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

int moebius(std::uint64_t n);
int moebius(const Factorization& f);

std::uint64_t totient(std::uint64_t n);
std::uint64_t totient(const Factorization& f);

unsigned omega(std::uint64_t n);
unsigned omega(const Factorization& f);

/// Product of the distinct primes dividing n; radical(1) = 1. This is the
/// square-free part m used throughout the Spence identities.
std::uint64_t radical(std::uint64_t n);
std::uint64_t radical(const Factorization& f);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Square-free divisors with their Moebius signs, ascending by divisor.
std::vector<SignedDivisor> signed_divisors(const Factorization& f);

/// U(n): the integers 1 <= a < n coprime to n, ascending. For n = 1 the set
/// is {1}.
struct TotativeSet {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;
};

/// Throws DomainError for n = 0 and ResourceError above limits.enumeration.
TotativeSet totatives(std::uint64_t n, const Limits& limits = {});
TotativeSet totatives(const Factorization& f, const Limits& limits = {});

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Exponent of the prime p in n. Throws DomainError unless p >= 2 and n >= 1.
/// Primality of p is the caller's contract.
unsigned valuation(std::uint64_t p, std::uint64_t n);

/// a * b, throwing OverflowError instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace totdk
