// totdk: evaluate, verify and benchmark the totative / Dedekind-sum identities.
//
//   totdk eval <kind> <args...>
//   totdk verify --from A --to B --suite S --format F [--workers W] [--allow-slow]
//   totdk bench --pairs P --max-a M --seed S
//
// Exit codes: 0 ok, 2 usage, 3 domain error, 4 correctness failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totdk/bench.hpp"
#include "totdk/dedekind.hpp"
#include "totdk/errors.hpp"
#include "totdk/spence.hpp"
#include "totdk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCorrectness = 4;

std::uint64_t parse_positive(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw totdk::UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw totdk::UsageError(std::string(what) + ": '" + text + "' does not fit in 64 bits");
  }
}

totdk::Rational parse_rational(const std::string& text, const char* what) {
  try {
    return totdk::Rational::parse(text);
  } catch (const totdk::DomainError& e) {
    throw totdk::UsageError(std::string(what) + ": " + e.what());
  }
}

void expect_args(const std::string& kind, const std::vector<std::string>& args, std::size_t count) {
  if (args.size() != count) {
    throw totdk::UsageError("eval " + kind + " takes " + std::to_string(count) + " argument(s), got " +
                            std::to_string(args.size()));
  }
}

std::string evaluate(const std::string& kind, const std::vector<std::string>& args) {
  using namespace totdk;
  if (kind == "spence") {
    expect_args(kind, args, 1);
    return to_string(spence_closed_form(parse_positive(args[0], "n")));
  }
  if (kind == "dedekind") {
    expect_args(kind, args, 2);
    return dedekind_fast(parse_positive(args[0], "b"), parse_positive(args[1], "a")).to_string();
  }
  if (kind == "theta") {
    expect_args(kind, args, 2);
    return to_string(theta(parse_positive(args[0], "n"), parse_rational(args[1], "x")));
  }
  if (kind == "nu") {
    expect_args(kind, args, 2);
    return nu(parse_positive(args[0], "n"), parse_rational(args[1], "x")).to_string();
  }
  if (kind == "ssum") {
    expect_args(kind, args, 1);
    return s_double_sum(parse_positive(args[0], "n")).to_string();
  }
  if (kind == "delange") {
    expect_args(kind, args, 1);
    return delange_double_sum(parse_positive(args[0], "n")).to_string();
  }
  throw UsageError("unknown eval kind '" + kind + "' (spence, dedekind, theta, nu, ssum, delange)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact totative sums and Dedekind sums"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a single quantity exactly");
  std::string kind;
  std::vector<std::string> eval_args;
  eval->add_option("kind", kind, "spence | dedekind | theta | nu | ssum | delange")->required();
  eval->add_option("args", eval_args, "Integer or p/q arguments");

  auto* verify = app.add_subcommand("verify", "Check identities over a range of n");
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string suite = "spence";
  std::string format = "human";
  unsigned workers = 1;
  bool allow_slow = false;
  bool timing = false;
  verify->add_option("--from", from, "First n (>= 2)")->required();
  verify->add_option("--to", to, "Last n")->required();
  verify->add_option("--suite", suite, "spence | chain | dedekind | all");
  verify->add_option("--format", format, "json | csv | human");
  verify->add_option("--workers", workers, "Worker threads");
  verify->add_flag("--allow-slow", allow_slow, "Lift the default range caps");
  verify->add_flag("--timing", timing, "Include elapsed_ms in JSON output");

  auto* bench = app.add_subcommand("bench", "Time naive vs reciprocity Dedekind evaluation");
  std::uint64_t pairs = 100;
  std::uint64_t max_a = 100'000;
  std::uint64_t seed = 1;
  bench->add_option("--pairs", pairs, "Number of (b, a) pairs");
  bench->add_option("--max-a", max_a, "Upper bound for b and a");
  bench->add_option("--seed", seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const totdk::Limits limits = totdk::Limits::from_environment();

    if (*eval) {
      std::cout << evaluate(kind, eval_args) << '\n';
      return kExitOk;
    }

    if (*verify) {
      const auto parsed_suite = totdk::parse_suite(suite);
      if (!parsed_suite) throw totdk::UsageError("unknown suite '" + suite + "'");
      const auto parsed_format = totdk::parse_format(format);
      if (!parsed_format) throw totdk::UsageError("unknown format '" + format + "'");

      const totdk::VerifyConfig config{from, to, *parsed_suite, workers, allow_slow, limits};
      const totdk::VerificationReport report = totdk::verify_range(config);
      switch (*parsed_format) {
        case totdk::ReportFormat::json: std::cout << totdk::render_json(report, timing); break;
        case totdk::ReportFormat::csv: std::cout << totdk::render_csv(report); break;
        case totdk::ReportFormat::human: std::cout << totdk::render_human(report); break;
      }
      return report.ok() ? kExitOk : kExitCorrectness;
    }

    if (*bench) {
      totdk::BenchConfig config;
      config.pairs = pairs;
      config.max_a = max_a;
      config.seed = seed;
      config.limits = limits;
      std::cout << totdk::render_bench_table(totdk::run_bench(config));
      return kExitOk;
    }
  } catch (const totdk::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const totdk::CorrectnessError& e) {
    std::cerr << "correctness failure: " << e.what() << '\n';
    return kExitCorrectness;
  } catch (const totdk::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kExitCorrectness;
  } catch (const totdk::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const totdk::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const totdk::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
