#include "totdk/bench.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "totdk/errors.hpp"
#include "wide.hpp"

namespace totdk {

std::uint64_t PairGenerator::next_raw() {
  state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
  return state_;
}

std::uint64_t PairGenerator::next_in(std::uint64_t max) {
  if (max == 0) throw DomainError("PairGenerator: max must be >= 1");
  const auto wide = static_cast<detail::u128>(next_raw()) * max;
  return 1 + static_cast<std::uint64_t>(wide >> 64);
}

DedekindArgs PairGenerator::next_pair(std::uint64_t max_a) {
  const std::uint64_t b = next_in(max_a);
  const std::uint64_t a = next_in(max_a);
  return {b, a};
}

double euclid_depth_bound(std::uint64_t max_a) {
  return 2.0 * std::log(static_cast<double>(std::max<std::uint64_t>(max_a, 1))) / std::log(std::numbers::phi) + 2.0;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.pairs == 0) throw UsageError("--pairs must be >= 1");
  if (config.max_a == 0) throw UsageError("--max-a must be >= 1");

  PairGenerator gen(config.seed);
  BenchReport report;
  report.depth_bound = euclid_depth_bound(config.max_a);
  report.min_depth = ~0u;
  double depth_total = 0;

  for (std::uint64_t i = 0; i < config.pairs; ++i) {
    BenchRow row;
    row.args = gen.next_pair(config.max_a);
    const auto [b, a] = row.args;

    FastDedekind fast = dedekind_fast_traced(b, a);
    row.fast_ns = time_per_call([&] { return dedekind_fast(b, a); }, config.min_time_ns);
    row.depth = fast.depth;
    row.value = fast.value;

    if (a <= config.limits.naive_dedekind) {
      const Rational naive = dedekind_naive(b, a, config.limits);
      if (naive != fast.value) {
        throw CorrectnessError("s(" + std::to_string(b) + ", " + std::to_string(a) + "): naive " +
                               naive.to_string() + " != fast " + fast.value.to_string());
      }
      row.naive_ns = time_per_call([&] { return dedekind_naive(b, a, config.limits); }, config.min_time_ns);
      ++report.compared;
    }

    report.min_depth = std::min(report.min_depth, row.depth);
    report.max_depth = std::max(report.max_depth, row.depth);
    depth_total += row.depth;
    report.rows.push_back(std::move(row));
  }
  report.mean_depth = depth_total / static_cast<double>(report.rows.size());
  return report;
}

std::string render_bench_table(const BenchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "b" << std::setw(16) << "a" << std::right << std::setw(14) << "naive_ns"
     << std::setw(12) << "fast_ns" << std::setw(12) << "speedup" << std::setw(7) << "depth"
     << "  value\n";
  os << std::fixed;
  for (const auto& row : report.rows) {
    os << std::left << std::setw(16) << row.args.b << std::setw(16) << row.args.a << std::right;
    if (row.naive_ns) {
      os << std::setw(14) << std::setprecision(1) << *row.naive_ns << std::setw(12) << row.fast_ns << std::setw(12)
         << *row.naive_ns / row.fast_ns;
    } else {
      os << std::setw(14) << "-" << std::setw(12) << std::setprecision(1) << row.fast_ns << std::setw(12) << "-";
    }
    os << std::setw(7) << row.depth << "  " << row.value << '\n';
  }
  os << std::setprecision(2);
  os << "pairs " << report.rows.size() << ", value checks passed " << report.compared << "\n";
  os << "depth min " << report.min_depth << " mean " << report.mean_depth << " max " << report.max_depth
     << " (bound " << report.depth_bound << ", " << (report.max_depth <= report.depth_bound ? "within" : "EXCEEDED")
     << ")\n";
  return os.str();
}

}  // namespace totdk
