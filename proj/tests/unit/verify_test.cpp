#include <gtest/gtest.h>

#include <json.hpp>

#include "totdk/errors.hpp"
#include "totdk/verify.hpp"

namespace totdk {
namespace {

VerifyConfig config(std::uint64_t from, std::uint64_t to, Suite suite, unsigned workers = 1) {
  VerifyConfig c;
  c.from = from;
  c.to = to;
  c.suite = suite;
  c.workers = workers;
  return c;
}

TEST(Validate, RejectsBadRanges) {
  EXPECT_THROW(validate(config(5, 4, Suite::spence)), UsageError);
  EXPECT_THROW(validate(config(1, 4, Suite::spence)), UsageError);
  EXPECT_THROW(validate(config(2, 4, Suite::spence, 0)), UsageError);
  EXPECT_THROW(validate(config(2, kBruteForceCap + 1, Suite::spence)), UsageError);
  EXPECT_THROW(validate(config(2, kDedekindSuiteCap + 1, Suite::dedekind)), UsageError);
  EXPECT_NO_THROW(validate(config(2, kBruteForceCap, Suite::chain)));
  auto slow = config(2, kBruteForceCap + 1, Suite::spence);
  slow.allow_slow = true;
  EXPECT_NO_THROW(validate(slow));
}

TEST(Parse, SuiteAndFormatNames) {
  EXPECT_EQ(parse_suite("chain"), Suite::chain);
  EXPECT_EQ(parse_suite("all"), Suite::all);
  EXPECT_FALSE(parse_suite("bogus"));
  EXPECT_EQ(parse_format("csv"), ReportFormat::csv);
  EXPECT_FALSE(parse_format("xml"));
  EXPECT_EQ(suite_name(Suite::dedekind), "dedekind");
}

TEST(VerifyRange, SpenceSuite) {
  const auto report = verify_range(config(2, 1000, Suite::spence));
  EXPECT_EQ(report.checked, 999u);
  EXPECT_TRUE(report.failures.empty());
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.results.size(), 999u);
  EXPECT_EQ(report.results.front().n, 2u);
  EXPECT_EQ(report.results.back().n, 1000u);
}

TEST(VerifyRange, ChainAtTwo) {
  const auto report = verify_range(config(2, 2, Suite::chain));
  EXPECT_EQ(report.checked, 1u);
  EXPECT_EQ(report.results.size(), 10u);
  for (const auto& r : report.results) EXPECT_TRUE(r.matched) << r.identity;
}

TEST(VerifyRange, DedekindAndAllSuites) {
  const auto d = verify_range(config(2, 60, Suite::dedekind));
  EXPECT_TRUE(d.ok());
  EXPECT_EQ(d.results.size(), 2u * 59);
  EXPECT_EQ(d.results[0].identity, identity::kFastVsNaive);
  EXPECT_EQ(d.results[0].lhs, Rational(2));
  const auto all = verify_range(config(2, 40, Suite::all));
  EXPECT_TRUE(all.ok());
  EXPECT_EQ(all.checked, 39u);
  EXPECT_EQ(all.results.size(), 39u * 12);
}

TEST(VerifyRange, ResourceErrorsBecomeFailures) {
  Limits limits;
  limits.enumeration = 50;
  const auto r = verify_at(Modulus(51), Suite::chain, limits);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].matched);
  EXPECT_EQ(r[0].reason, "resource");
}

TEST(Report, IdenticalForAnyWorkerCount) {
  const auto one = verify_range(config(2, 300, Suite::all, 1));
  for (unsigned w : {2u, 3u, 8u}) {
    const auto many = verify_range(config(2, 300, Suite::all, w));
    EXPECT_EQ(render_json(one), render_json(many));
    EXPECT_EQ(render_csv(one), render_csv(many));
  }
}

TEST(Report, JsonSchema) {
  auto report = verify_range(config(2, 10, Suite::chain));
  // Inject a failure to check the per-result layout.
  IdentityResult bad = IdentityResult::compare(7, "spence", Rational(1), Rational::make(-1, 18));
  report.failures.push_back(bad);
  const auto j = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(j["range_start"], 2);
  EXPECT_EQ(j["range_end"], 10);
  EXPECT_EQ(j["checked"], 9);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  ASSERT_EQ(j["failures"].size(), 1u);
  const auto& f = j["failures"][0];
  EXPECT_EQ(f["n"], 7);
  EXPECT_EQ(f["identity"], "spence");
  EXPECT_EQ(f["lhs"], "1");
  EXPECT_EQ(f["rhs"], "-1/18");
  EXPECT_EQ(f["matched"], false);
  EXPECT_EQ(j["config"]["suite"], "chain");
  EXPECT_TRUE(nlohmann::json::parse(render_json(report, true)).contains("elapsed_ms"));
}

TEST(Report, CsvLayout) {
  const auto report = verify_range(config(5, 6, Suite::spence));
  EXPECT_EQ(render_csv(report), "n,identity,lhs,rhs,matched\n5,spence,30,30,true\n6,spence,11,11,true\n");
}

TEST(Report, HumanSummary) {
  const auto text = render_human(verify_range(config(2, 20, Suite::spence)));
  EXPECT_NE(text.find("checked 19 of 19"), std::string::npos);
  EXPECT_NE(text.find("all identities matched"), std::string::npos);
}

}  // namespace
}  // namespace totdk
