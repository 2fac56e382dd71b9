#include <gtest/gtest.h>

#include <numeric>

#include "support/oracles.hpp"
#include "totdk/dedekind.hpp"
#include "totdk/errors.hpp"
#include "totdk/spence.hpp"

namespace totdk {
namespace {

Rational R(std::int64_t p, std::int64_t q) { return Rational::make(p, q); }

TEST(Theta, Examples) {
  EXPECT_EQ(theta(6, Rational(4)), 1);
  EXPECT_EQ(theta(6, Rational(6)), 2);
  for (std::uint64_t n : {1, 2, 12, 97}) EXPECT_EQ(theta(n, Rational(0)), 0);
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu(6, Rational(4)), R(1, 3));
  for (std::uint64_t n : {1, 2, 12, 97}) EXPECT_EQ(nu(n, Rational(0)), Rational(0));
  EXPECT_EQ(nu(5, Rational(2)), R(-2, 5));
}

// theta_n(x) + nu_n(x) = x phi(n) / n for rational x of either sign.
TEST(ThetaNuProperty, SplitOfXPhiOverN) {
  std::vector<Rational> grid;
  for (std::int64_t q : {1, 2, 3, 7, 12}) {
    for (std::int64_t p = -40; p <= 40; p += 3) grid.push_back(R(p, q));
  }
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const Modulus mod(n);
    std::vector<Rational> xs = grid;
    for (std::uint64_t d : divisors(n)) {
      // values just around each divisor
      xs.push_back(Rational(d));
      xs.push_back(Rational::make(Integer(d) * 5 - 1, 5));
      xs.push_back(Rational::make(Integer(d) * 5 + 1, 5));
    }
    const Rational ratio = Rational::make(mod.totient(), n);
    for (const Rational& x : xs) ASSERT_EQ(Rational(theta(mod, x)) + nu(mod, x), x * ratio) << n << ' ' << x;
  }
}

TEST(ThetaProperty, CountsCoprimes) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const Modulus mod(n);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x <= n; ++x) {
      if (x > 0 && std::gcd(x, n) == 1) ++count;
      ASSERT_EQ(theta(mod, Rational(x)), count) << n << ' ' << x;
    }
  }
}

TEST(SumJaj, Examples) {
  EXPECT_EQ(sum_j_aj_bruteforce(5), 30);
  EXPECT_EQ(sum_j_aj_bruteforce(4), 7);
  EXPECT_EQ(sum_j_aj_bruteforce(6), 11);
  EXPECT_THROW(sum_j_aj_bruteforce(1), DomainError);
  Limits limits;
  limits.enumeration = 10;
  EXPECT_THROW(sum_j_aj_bruteforce(11, limits), ResourceError);
}

TEST(SpenceClosedForm, Examples) {
  EXPECT_EQ(spence_closed_form(5), 30);
  EXPECT_EQ(spence_closed_form(4), 7);
  EXPECT_EQ(spence_closed_form(6), 11);
  EXPECT_THROW(spence_closed_form(1), DomainError);
  EXPECT_THROW(spence_closed_form(0), DomainError);
}

TEST(SpenceClosedForm, LargeArgumentsAgainstStructuredOracles) {
  const std::uint64_t p = 1099511627791ULL;  // smallest prime above 2^40
  EXPECT_EQ(spence_closed_form(p), oracle::sum_j_aj_prime(p));
  EXPECT_EQ(spence_closed_form(p), Integer("443075998612501382019245557153793015"));
  const std::uint64_t n = 1ULL << 40;
  EXPECT_EQ(spence_closed_form(n), oracle::sum_j_aj_power_of_two(n));
  EXPECT_EQ(spence_closed_form(n), Integer("110768999648894105136102325377564672"));
  EXPECT_EQ(spence_closed_form(1ULL << 62), oracle::sum_j_aj_power_of_two(1ULL << 62));
}

TEST(SpenceProperty, ClosedFormMatchesGcdScan) {
  for (std::uint64_t n = 2; n <= 3000; ++n) ASSERT_EQ(spence_closed_form(n), oracle::sum_j_aj(n)) << n;
}

TEST(SpenceProperty, NumeratorDivisibleBy24) {
  for (std::uint64_t n = 2; n <= 100'000; ++n) ASSERT_EQ(spence_numerator(Modulus(n)) % 24, 0) << n;
}

TEST(SumSquares, Examples) {
  EXPECT_EQ(sum_squares_closed_form(5), 30);
  EXPECT_EQ(sum_squares_bruteforce(5), 30);
  EXPECT_EQ(sum_squares_closed_form(6), 26);
  EXPECT_EQ(sum_squares_bruteforce(6), 26);
  EXPECT_EQ(sum_squares_closed_form(4), 10);
  EXPECT_EQ(sum_squares_bruteforce(4), 10);
  EXPECT_THROW(sum_squares_closed_form(1), DomainError);
}

TEST(MobiusTransform, Examples) {
  EXPECT_EQ(mobius_transform_sum(6, [](std::uint64_t x) { return Rational(x); }), Rational(6));
  EXPECT_EQ(mobius_transform_sum(5, [](std::uint64_t x) { return Rational(x * x); }), Rational(30));
  EXPECT_EQ(mobius_transform_sum(1, [](std::uint64_t x) { return Rational(x + 41); }), Rational(42));
}

TEST(MobiusTransformProperty, EqualsSumOverTotatives) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto units = oracle::totatives(n);
    const auto direct = [&](const ArithmeticFunction& f) {
      Rational total;
      for (std::uint64_t a : units) total += f(a);
      return total;
    };
    std::vector<ArithmeticFunction> fs = {
        [](std::uint64_t x) { return Rational(x); },
        [](std::uint64_t x) { return Rational(x * x); },
        [](std::uint64_t x) { return Rational(x * x * x); },
    };
    for (std::uint64_t d : divisors(n)) {
      fs.push_back([d](std::uint64_t x) { return sawtooth(Rational::make(x, d)) * Rational(x); });
    }
    for (const auto& f : fs) ASSERT_EQ(mobius_transform_sum(n, f), direct(f)) << n;
  }
}

TEST(NuWeightedSum, Examples) {
  EXPECT_EQ(nu_weighted_sum_bruteforce(5), Rational(-6));
  EXPECT_EQ(nu_weighted_sum_bruteforce(4), Rational(-2) + s_double_sum(4));
  EXPECT_EQ(nu_weighted_sum_bruteforce(6), Rational(-3) + s_double_sum(6));
}

TEST(NuWeightedSum, AgainstDirectRationalSummation) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const Modulus mod(n);
    Rational direct;
    for (std::uint64_t a : oracle::totatives(n)) direct += nu(mod, Rational(a)) * Rational(a);
    ASSERT_EQ(nu_weighted_sum_bruteforce(n), direct) << n;
    Integer theta_direct;
    for (std::uint64_t a : oracle::totatives(n)) theta_direct += theta(mod, Rational(a)) * a;
    ASSERT_EQ(theta_weighted_sum(mod, totatives(n)), theta_direct) << n;
  }
}

TEST(SDoubleSum, Examples) {
  EXPECT_EQ(s_double_sum(5), Rational(-1));
  EXPECT_EQ(s_double_sum(2), Rational(0));
  EXPECT_EQ(s_double_sum(6), R(2, 3));
  EXPECT_EQ(s_closed_form(5), Rational(-1));
  EXPECT_EQ(s_closed_form(6), R(2, 3));
  EXPECT_EQ(s_closed_form(2), Rational(0));
  EXPECT_THROW(s_double_sum(1), DomainError);
}

TEST(SDoubleSum, PrimesKeepOnlyOneTerm) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101, 7919}) {
    EXPECT_EQ(s_double_sum(p), Rational::make(-Integer(p - 1) * (p - 2), 12)) << p;
  }
}

TEST(SProperty, DoubleSumEqualsClosedForm) {
  for (std::uint64_t n = 2; n <= 2000; ++n) ASSERT_EQ(s_double_sum(n), s_closed_form(n)) << n;
}

TEST(Delange, Examples) {
  EXPECT_EQ(delange_double_sum(1), Rational(1));
  EXPECT_EQ(delange_closed_form(1), Rational(1));
  EXPECT_EQ(delange_double_sum(5), R(8, 5));
  EXPECT_EQ(delange_closed_form(5), R(8, 5));
}

TEST(Delange, PrimePowers) {
  for (std::uint64_t p : {2, 3, 5, 7, 31}) {
    std::uint64_t q = p;
    for (int alpha = 1; alpha <= 5; ++alpha, q *= p) {
      const Rational expected = Rational(2) * (Rational(1) - Rational::make(1, p));
      EXPECT_EQ(delange_double_sum(q), expected) << q;
    }
  }
}

TEST(DelangeProperty, DoubleSumEqualsClosedFormAndIsMultiplicative) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) ASSERT_EQ(delange_double_sum(n), delange_closed_form(n)) << n;
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t b = 1; b <= 100; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ASSERT_EQ(delange_double_sum(a * b), delange_double_sum(a) * delange_double_sum(b));
    }
  }
}

TEST(VerifyChain, AllLinksMatchForExamples) {
  for (std::uint64_t n : {2, 5, 30}) {
    const auto links = verify_chain(n);
    ASSERT_EQ(links.size(), 10u);
    for (const auto& link : links) {
      EXPECT_TRUE(link.matched) << n << ' ' << link.identity << ": " << link.lhs << " vs " << link.rhs;
      EXPECT_EQ(link.n, n);
      EXPECT_TRUE(link.reason.empty());
    }
  }
  EXPECT_EQ(verify_chain(5).back().identity, identity::kSpence);
  EXPECT_EQ(verify_chain(5).back().lhs, Rational(30));
}

TEST(VerifyChain, Errors) {
  EXPECT_THROW(verify_chain(1), DomainError);
  Limits limits;
  limits.enumeration = 100;
  EXPECT_THROW(verify_chain(101, limits), ResourceError);
}

TEST(VerifyChain, NuLinkEqualsMinusQuarterNPhiPlusS) {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    const Modulus mod(n);
    ASSERT_EQ(nu_weighted_sum_bruteforce(n), Rational::make(-Integer(n) * mod.totient(), 4) + s_double_sum(mod)) << n;
  }
}

}  // namespace
}  // namespace totdk
