#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totdk/dedekind.hpp"
#include "totdk/limits.hpp"

namespace totdk {

/// Reproducible pair source for benchmarks.
///
/// State update is the 64-bit linear congruential generator
///   x <- 6364136223846793005 * x + 1442695040888963407  (mod 2^64)
/// starting from x = seed. A value in [1, max] is drawn from the updated state
/// as 1 + floor(x * max / 2^64), which uses the high bits of x. Each pair
/// draws b first, then a.
class PairGenerator {
 public:
  explicit PairGenerator(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_raw();
  std::uint64_t next_in(std::uint64_t max);
  DedekindArgs next_pair(std::uint64_t max_a);

 private:
  std::uint64_t state_;
};

struct BenchConfig {
  std::uint64_t pairs = 100;
  std::uint64_t max_a = 100'000;
  std::uint64_t seed = 1;
  Limits limits;
  /// Minimum wall time spent timing each evaluator per pair.
  double min_time_ns = 200'000;
};

struct BenchRow {
  DedekindArgs args;
  /// Empty when a exceeds the naive bound.
  std::optional<double> naive_ns;
  double fast_ns = 0;
  unsigned depth = 0;
  Rational value;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  unsigned min_depth = 0;
  unsigned max_depth = 0;
  double mean_depth = 0;
  /// 2 log_phi(max_a) + 2, phi the golden ratio.
  double depth_bound = 0;
  /// Pairs where both evaluators ran and agreed.
  std::uint64_t compared = 0;
};

/// Nanoseconds per call of `fn`, repeating until `min_time_ns` has elapsed.
template <typename Fn>
double time_per_call(Fn&& fn, double min_time_ns) {
  using clock = std::chrono::steady_clock;
  std::uint64_t calls = 0;
  const auto start = clock::now();
  double elapsed = 0;
  do {
    fn();
    ++calls;
    elapsed = std::chrono::duration<double, std::nano>(clock::now() - start).count();
  } while (elapsed < min_time_ns);
  return elapsed / static_cast<double>(calls);
}

/// Times dedekind_naive against dedekind_fast on `pairs` generated pairs.
/// Throws CorrectnessError on the first value mismatch.
BenchReport run_bench(const BenchConfig& config);

/// 2 log_phi(max_a) + 2.
double euclid_depth_bound(std::uint64_t max_a);

std::string render_bench_table(const BenchReport& report);

}  // namespace totdk
