#include <gtest/gtest.h>

#include "crankparity/distinct.hpp"
#include "crankparity/partition.hpp"

using namespace crankparity;

TEST(Pentagonal, FloorAndCeiling) {
  const PentagonalInfo five = pent_info(5);
  EXPECT_TRUE(five.is_pent);
  EXPECT_EQ(five.R, -2);
  const PentagonalInfo six = pent_info(6);
  EXPECT_FALSE(six.is_pent);
  EXPECT_EQ(six.floor_p, 5);
  EXPECT_EQ(six.ceil_p, 7);
  EXPECT_EQ(six.R_floor, -2);
  EXPECT_EQ(six.R_ceil, 2);
  EXPECT_EQ(pent_info(2).R, 1);
  EXPECT_EQ(pent_info(0).R, 0);
  EXPECT_THROW(pent_info(-1), Error);
}

TEST(Pentagonal, FloorEqualsCeilingExactlyAtPentagonals) {
  std::vector<bool> is_pent(3001, false);
  for (std::int64_t m = -50; m <= 50; ++m)
    if (pentagonal(m) <= 3000) is_pent[static_cast<std::size_t>(pentagonal(m))] = true;
  for (std::int64_t n = 0; n <= 3000; ++n) {
    const PentagonalInfo p = pent_info(n);
    EXPECT_EQ(p.is_pent, is_pent[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(p.floor_p == p.ceil_p, p.is_pent) << n;
    EXPECT_LE(p.floor_p, n);
    EXPECT_GE(p.ceil_p, n);
    EXPECT_EQ(pentagonal(p.R_floor), p.floor_p);
    EXPECT_EQ(pentagonal(p.R_ceil), p.ceil_p);
  }
}

TEST(Formula, SmallValues) {
  EXPECT_EQ(exact_formula(6), 2);
  EXPECT_EQ(exact_formula(2), 1);
  EXPECT_EQ(exact_formula(3), 0);
  EXPECT_EQ(exact_formula(1), -1);
  EXPECT_EQ(formula_case(2), FormulaCase::pent_odd_positive);
  EXPECT_STREQ(to_string(FormulaCase::otherwise), "otherwise");
  EXPECT_THROW(exact_formula(0), Error);
}

TEST(Formula, MatchesEnumeration) {
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(exact_formula(n), distinct_crank_parity_oracle(n)) << n;
}

TEST(Formula, RangeAndZeros) {
  int zeros = 0;
  for (int n = 1; n <= 2000; ++n) {
    const int v = exact_formula(n);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
    zeros += v == 0;
  }
  EXPECT_GE(zeros, 100);
}

TEST(Formula, SplitsIntoTwoParts) {
  const int T = 2001;
  const Series a = aofn_series(T);
  const Series b = bofn_series(T);
  for (int n = 1; n < T; ++n) {
    ASSERT_EQ(a.coeff(n), a_of_n(n)) << n;
    ASSERT_EQ(b.coeff(n), b_of_n(n)) << n;
    ASSERT_EQ(a_of_n(n) + b_of_n(n), exact_formula(n)) << n;
  }
}

TEST(Series, DistinctCrankGeneratingFunction) {
  const Series s = distinct_crank_series(20);
  EXPECT_EQ(s.coeff(6), 2);
  EXPECT_EQ(s.coeff(5), -1);
}

TEST(Series, InformativeIdentity) {
  const InformativeReport r = informative_series_check(2000);
  EXPECT_TRUE(r.two_sum);
  EXPECT_TRUE(r.part1);
  EXPECT_TRUE(r.part2);
  EXPECT_EQ(r.formula_mismatch, std::nullopt);
  EXPECT_TRUE(r);
}

TEST(Series, WatsonWhippleSpecialization) {
  EXPECT_TRUE(watson_whipple_specialization_check(1000));
}

TEST(SignedFactorization, Examples) {
  using F = std::vector<std::pair<std::int64_t, int>>;
  EXPECT_EQ(signed_factorization(25).factors, (F{{-5, 2}}));
  EXPECT_EQ(signed_factorization(49).factors, (F{{7, 2}}));
  EXPECT_EQ(signed_factorization(1081).factors, (F{{-23, 1}, {-47, 1}}));
  EXPECT_EQ(signed_factorization(73).factors, (F{{73, 1}}));
  EXPECT_THROW(signed_factorization(24), Error);
}

TEST(Adh, SmallCasesFromTheRules) {
  // 25 = (-5)^2 with -5 == 19 (mod 24): T = 1; 49 = 7^2 with 7 == 7 (mod 24): T = -1
  EXPECT_EQ(adh_T(1, {}), 1);
  EXPECT_EQ(adh_T(2, {}), -1);
  EXPECT_EQ(adh_T(1, {}), distinct_rank_parity_oracle(1));
  EXPECT_EQ(adh_T(2, {}), distinct_rank_parity_oracle(2));
  try {
    adh_T(3, {});  // 73 is a prime == 1 (mod 24)
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::bootstrap_needed);
  }
}

TEST(Adh, MatchesEnumeration) {
  const AdhReport r = adh_check(distinct_rank_oracle_values(60));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.first_mismatch, std::nullopt);
  EXPECT_TRUE(r.unresolved.empty());
  EXPECT_EQ(r.bootstrap.gauge_prime, -23);
}

TEST(Adh, LargerRangeFromSeries) {
  const int T = 400;
  const Series s = distinct_rank_series(T + 1);
  std::vector<std::int64_t> v(static_cast<std::size_t>(T + 1));
  for (int n = 1; n <= T; ++n) v[static_cast<std::size_t>(n)] = s.coeff(n).get_si();
  const AdhReport r = adh_check(v);
  EXPECT_EQ(r.first_mismatch, std::nullopt);
  // every T(24n+1) that could be evaluated agreed
  EXPECT_LT(r.unresolved.size(), static_cast<std::size_t>(T / 4));
}

TEST(Adh, DetectsACorruptedValue) {
  auto v = distinct_rank_oracle_values(60);
  // T(49) needs no bootstrapped prime
  v[2] = -v[2];
  const AdhReport r = adh_check(v);
  EXPECT_EQ(r.first_mismatch, 2);
}
