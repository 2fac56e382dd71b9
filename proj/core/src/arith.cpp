#include "totdk/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "totdk/errors.hpp"

namespace totdk {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime < 2 || factors_[i].exponent == 0 ||
        (i > 0 && factors_[i - 1].prime >= factors_[i].prime)) {
      throw InvariantViolation("non-canonical factorization");
    }
  }
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, e] : factors_) {
    for (unsigned i = 0; i < e; ++i) n = checked_mul(n, p);
  }
  return n;
}

namespace {

void divide_out(std::uint64_t& n, std::uint64_t p, std::vector<PrimePower>& out) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<PrimePower> out;
  for (std::uint64_t p : {2u, 3u, 5u}) divide_out(n, p, out);
  // Candidates coprime to 30, starting at 7.
  static constexpr std::uint64_t kGaps[] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  for (std::size_t i = 0; p <= n / p; p += kGaps[i], i = (i + 1) % 8) {
    divide_out(n, p, out);
  }
  if (n > 1) out.push_back({n, 1});
  return Factorization(std::move(out));
}

PrimeSieve::PrimeSieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

Factorization PrimeSieve::factorize(std::uint64_t n) const {
  if (n == 0 || n >= spf_.size()) {
    throw DomainError("PrimeSieve: " + std::to_string(n) + " outside [1, " + std::to_string(limit()) + "]");
  }
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return Factorization(std::move(out));
}

int moebius(const Factorization& f) {
  for (const auto& pp : f.factors()) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

std::uint64_t totient(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi = checked_mul(phi, p - 1);
    for (unsigned i = 1; i < e; ++i) phi = checked_mul(phi, p);
  }
  return phi;
}

unsigned omega(const Factorization& f) { return static_cast<unsigned>(f.factors().size()); }

std::uint64_t radical(const Factorization& f) {
  std::uint64_t m = 1;
  for (const auto& pp : f.factors()) m = checked_mul(m, pp.prime);
  return m;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedDivisor> signed_divisors(const Factorization& f) {
  std::vector<SignedDivisor> out{{1, 1}};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      out.push_back({out[i].divisor * pp.prime, -out[i].mu});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SignedDivisor& x, const SignedDivisor& y) { return x.divisor < y.divisor; });
  return out;
}

int moebius(std::uint64_t n) { return moebius(factorize(n)); }
std::uint64_t totient(std::uint64_t n) { return totient(factorize(n)); }
unsigned omega(std::uint64_t n) { return omega(factorize(n)); }
std::uint64_t radical(std::uint64_t n) { return radical(factorize(n)); }
std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

TotativeSet totatives(const Factorization& f, const Limits& limits) {
  const std::uint64_t n = f.value();
  if (n > limits.enumeration) {
    throw ResourceError("totatives: n = " + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(limits.enumeration));
  }
  TotativeSet set{n, {}};
  if (n == 1) {
    set.members = {1};
    return set;
  }
  std::vector<char> coprime(n, 1);
  for (const auto& pp : f.factors()) {
    for (std::uint64_t k = pp.prime; k < n; k += pp.prime) coprime[k] = 0;
  }
  set.members.reserve(totient(f));
  for (std::uint64_t a = 1; a < n; ++a) {
    if (coprime[a]) set.members.push_back(a);
  }
  return set;
}

TotativeSet totatives(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw DomainError("totatives: n must be >= 1");
  if (n > limits.enumeration) {
    throw ResourceError("totatives: n = " + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(limits.enumeration));
  }
  return totatives(factorize(n), limits);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

unsigned valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw DomainError("valuation: p must be prime");
  if (n == 0) throw DomainError("valuation: n must be >= 1");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace totdk
