#pragma once

#include <cstdint>

#include "totdk/limits.hpp"
#include "totdk/rational.hpp"

namespace totdk {

/// Arguments of s(b, a). Coprimality is not required.
struct DedekindArgs {
  std::uint64_t b = 0;
  std::uint64_t a = 1;

  friend bool operator==(const DedekindArgs&, const DedekindArgs&) = default;
};

/// ((x)): 0 at integers, frac(x) - 1/2 elsewhere.
Rational sawtooth(const Rational& x);

/// s(b, a) = sum_{k=1..a} ((kb/a)) ((k/a)), evaluated term by term in O(a).
/// b = 0 is accepted and gives 0. Throws DomainError for a = 0 and
/// ResourceError when a > limits.naive_dedekind.
Rational dedekind_naive(std::uint64_t b, std::uint64_t a, const Limits& limits = {});

/// a^2 + b^2 + 1 - 3ab, the numerator of reciprocity_rhs over 12ab.
Integer reciprocity_numerator(std::uint64_t a, std::uint64_t b);

/// -1/4 + (a/b + 1/(ab) + b/a) / 12, which equals s(a, b) + s(b, a) when
/// gcd(a, b) = 1. Throws DomainError if a or b is zero.
Rational reciprocity_rhs(std::uint64_t a, std::uint64_t b);

/// Single steps of the fast evaluator. Each preserves the value of s.
namespace dedekind_step {

/// s(b, a) = s(b/g, a/g) with g = gcd(b, a). s(0, a) reduces to s(0, 1).
DedekindArgs reduce_gcd(DedekindArgs args);

/// s(b, a) = s(b mod a, a).
DedekindArgs reduce_mod(DedekindArgs args);

/// For coprime b, a >= 1: s(b, a) = rhs - s(swapped), swapped = (a, b).
struct Reciprocity {
  Rational rhs;
  DedekindArgs swapped;
};
/// Throws DomainError unless b, a >= 1 and gcd(b, a) = 1.
Reciprocity reciprocity(DedekindArgs args);

}  // namespace dedekind_step

struct FastDedekind {
  Rational value;
  /// Number of reciprocity swaps performed.
  unsigned depth = 0;
};

/// s(b, a) in O(log min(a, b)) steps: gcd-reduce, then alternate mod-reduce
/// and reciprocity swap until a = 1. Throws DomainError for a = 0.
FastDedekind dedekind_fast_traced(std::uint64_t b, std::uint64_t a);

inline Rational dedekind_fast(std::uint64_t b, std::uint64_t a) {
  return dedekind_fast_traced(b, a).value;
}

}  // namespace totdk
