#include "totdk/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "totdk/dedekind.hpp"
#include "totdk/errors.hpp"

namespace totdk {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "spence") return Suite::spence;
  if (name == "chain") return Suite::chain;
  if (name == "dedekind") return Suite::dedekind;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::spence: return "spence";
    case Suite::chain: return "chain";
    case Suite::dedekind: return "dedekind";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "human") return ReportFormat::human;
  return std::nullopt;
}

void validate(const VerifyConfig& config) {
  if (config.from < 2) throw UsageError("--from must be >= 2");
  if (config.from > config.to) {
    throw UsageError("empty range: from " + std::to_string(config.from) + " > to " + std::to_string(config.to));
  }
  if (config.workers == 0) throw UsageError("--workers must be >= 1");
  if (config.to > std::numeric_limits<std::uint32_t>::max()) throw UsageError("--to exceeds the sieve range");
  const bool enumerates = config.suite != Suite::dedekind;
  const bool quadratic = config.suite == Suite::dedekind || config.suite == Suite::all;
  if (enumerates && config.to > config.limits.enumeration) {
    throw UsageError("--to exceeds the enumeration bound " + std::to_string(config.limits.enumeration));
  }
  if (!config.allow_slow) {
    if (enumerates && config.to > kBruteForceCap) {
      throw UsageError("--to above " + std::to_string(kBruteForceCap) + " needs --allow-slow");
    }
    if (quadratic && config.to > kDedekindSuiteCap) {
      throw UsageError("--to above " + std::to_string(kDedekindSuiteCap) + " for the dedekind suite needs --allow-slow");
    }
  }
  if (quadratic && config.to > config.limits.naive_dedekind) {
    throw UsageError("--to exceeds the naive Dedekind bound " + std::to_string(config.limits.naive_dedekind));
  }
}

namespace {

IdentityResult failed(std::uint64_t n, std::string identity, std::string reason) {
  IdentityResult r;
  r.n = n;
  r.identity = std::move(identity);
  r.matched = false;
  r.reason = std::move(reason);
  return r;
}

IdentityResult spence_at(const Modulus& n, const Limits& limits) {
  const TotativeSet units = totatives(n.factors(), limits);
  return IdentityResult::compare(n.n(), identity::kSpence, sum_j_aj_bruteforce(units), spence_closed_form(n));
}

void dedekind_at(std::uint64_t a, const Limits& limits, std::vector<IdentityResult>& out) {
  std::uint64_t agree = 0;
  std::uint64_t coprime = 0;
  std::uint64_t reciprocal = 0;
  for (std::uint64_t b = 1; b <= a; ++b) {
    const Rational naive = dedekind_naive(b, a, limits);
    if (dedekind_fast(b, a) == naive) ++agree;
    if (gcd(a, b) == 1) {
      ++coprime;
      if (naive + dedekind_naive(a, b, limits) == reciprocity_rhs(a, b)) ++reciprocal;
    }
  }
  out.push_back(IdentityResult::compare(a, identity::kFastVsNaive, Rational(agree), Rational(a)));
  out.push_back(IdentityResult::compare(a, identity::kReciprocity, Rational(reciprocal), Rational(coprime)));
}

}  // namespace

std::vector<IdentityResult> verify_at(const Modulus& n, Suite suite, const Limits& limits) {
  std::vector<IdentityResult> out;
  const auto guarded = [&](const char* label, auto&& body) {
    try {
      body();
    } catch (const OverflowError&) {
      out.push_back(failed(n.n(), label, "overflow"));
    } catch (const ResourceError&) {
      out.push_back(failed(n.n(), label, "resource"));
    } catch (const InvariantViolation& e) {
      out.push_back(failed(n.n(), label, std::string("invariant: ") + e.what()));
    }
  };
  if (suite == Suite::spence) {
    guarded(identity::kSpence, [&] { out.push_back(spence_at(n, limits)); });
  }
  if (suite == Suite::chain || suite == Suite::all) {
    guarded("chain", [&] {
      auto links = verify_chain(n, limits);
      out.insert(out.end(), std::make_move_iterator(links.begin()), std::make_move_iterator(links.end()));
    });
  }
  if (suite == Suite::dedekind || suite == Suite::all) {
    guarded("dedekind", [&] { dedekind_at(n.n(), limits, out); });
  }
  return out;
}

VerificationReport verify_range(const VerifyConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  const PrimeSieve sieve(static_cast<std::uint32_t>(config.to));
  const std::uint64_t count = config.to - config.from + 1;
  std::vector<std::vector<IdentityResult>> per_n(count);

  // Strided shards: worker w takes offsets w, w + W, w + 2W, ...
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, count));
  auto shard = [&](unsigned w) {
    for (std::uint64_t i = w; i < count; i += workers) {
      const Modulus n(sieve.factorize(config.from + i));
      per_n[i] = verify_at(n, config.suite, config.limits);
    }
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w);
  }

  VerificationReport report;
  report.range_start = config.from;
  report.range_end = config.to;
  report.config = config;
  for (auto& results : per_n) {
    const bool evaluated = std::none_of(results.begin(), results.end(),
                                        [](const IdentityResult& r) { return !r.reason.empty(); });
    if (evaluated) ++report.checked;
    for (auto& r : results) {
      if (!r.matched) report.failures.push_back(r);
      report.results.push_back(std::move(r));
    }
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

namespace {

nlohmann::ordered_json to_json(const IdentityResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["identity"] = r.identity;
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["matched"] = r.matched;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace

std::string render_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["range_start"] = report.range_start;
  j["range_end"] = report.range_end;
  j["checked"] = report.checked;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) j["failures"].push_back(to_json(f));
  // The worker count is left out: reports must not depend on it.
  j["config"] = {
      {"suite", std::string(suite_name(report.config.suite))},
      {"allow_slow", report.config.allow_slow},
      {"naive_bound", report.config.limits.naive_dedekind},
      {"enumeration_bound", report.config.limits.enumeration},
  };
  if (include_timing) j["elapsed_ms"] = report.elapsed.count();
  return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "n,identity,lhs,rhs,matched\n";
  for (const auto& r : report.results) {
    os << r.n << ',' << r.identity << ',' << r.lhs << ',' << r.rhs << ',' << (r.matched ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string render_human(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite " << suite_name(report.config.suite) << " over [" << report.range_start << ", " << report.range_end
     << "]\n";
  os << "checked " << report.checked << " of " << (report.range_end - report.range_start + 1) << " values of n, "
     << report.results.size() << " identities evaluated\n";
  for (const auto& f : report.failures) {
    os << "  FAIL n=" << f.n << ' ' << f.identity;
    if (f.reason.empty()) {
      os << ": " << f.lhs << " != " << f.rhs;
    } else {
      os << ": " << f.reason;
    }
    os << '\n';
  }
  os << (report.ok() ? "all identities matched" : std::to_string(report.failures.size()) + " failure(s)") << " in "
     << report.elapsed.count() << " ms\n";
  return os.str();
}

}  // namespace totdk
