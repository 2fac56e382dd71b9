#pragma once

#include <cstdint>

namespace totdk {

/// Resource guards for the brute-force paths. The closed forms and the fast
/// Dedekind evaluator are not bounded.
struct Limits {
  /// Largest modulus `a` accepted by dedekind_naive.
  std::uint64_t naive_dedekind = 10'000'000;
  /// Largest n whose totatives may be enumerated.
  std::uint64_t enumeration = 100'000'000;

  /// Defaults, with `naive_dedekind` overridden by TOTDK_NAIVE_BOUND when set.
  /// Throws DomainError if the variable is not a positive integer.
  static Limits from_environment();
};

}  // namespace totdk
