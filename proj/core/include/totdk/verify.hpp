#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totdk/limits.hpp"
#include "totdk/spence.hpp"

namespace totdk {

enum class Suite { spence, chain, dedekind, all };
enum class ReportFormat { json, csv, human };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::optional<ReportFormat> parse_format(std::string_view name);

/// Largest `to` accepted for the enumeration suites (spence, chain) without
/// allow_slow.
inline constexpr std::uint64_t kBruteForceCap = 100'000;
/// Same for the dedekind suite, which is quadratic in n.
inline constexpr std::uint64_t kDedekindSuiteCap = 5'000;

/// Identity names emitted by the dedekind suite. lhs counts the agreeing
/// cases at modulus n, rhs the number of cases tried.
namespace identity {
inline constexpr const char* kFastVsNaive = "dedekind_fast_vs_naive";
inline constexpr const char* kReciprocity = "reciprocity";
}  // namespace identity

struct VerifyConfig {
  std::uint64_t from = 2;
  std::uint64_t to = 2;
  Suite suite = Suite::spence;
  unsigned workers = 1;
  bool allow_slow = false;
  Limits limits;
};

struct VerificationReport {
  std::uint64_t range_start = 0;
  std::uint64_t range_end = 0;
  /// Number of n for which every selected identity could be evaluated.
  std::uint64_t checked = 0;
  /// Every evaluated identity, ascending by n and then in suite order.
  std::vector<IdentityResult> results;
  /// The subset of `results` with matched = false.
  std::vector<IdentityResult> failures;
  std::chrono::milliseconds elapsed{0};
  VerifyConfig config;

  bool ok() const { return failures.empty(); }
};

/// Throws UsageError for an empty or inverted range, from < 2, a zero worker
/// count, or a range above the caps without allow_slow.
void validate(const VerifyConfig& config);

/// The identities checked by `suite` at a single n. Evaluation failures are
/// returned as unmatched results carrying a reason instead of throwing.
std::vector<IdentityResult> verify_at(const Modulus& n, Suite suite, const Limits& limits);

/// Runs the suite over [from, to], sharded across `workers` threads. The
/// report is independent of the worker count.
VerificationReport verify_range(const VerifyConfig& config);

/// Top-level report object. `elapsed_ms` is emitted only when include_timing
/// is set.
std::string render_json(const VerificationReport& report, bool include_timing = false);
/// Header n,identity,lhs,rhs,matched followed by one row per result.
std::string render_csv(const VerificationReport& report);
std::string render_human(const VerificationReport& report);

}  // namespace totdk
