#include <gtest/gtest.h>

#include "crankparity/crank_series.hpp"
#include "crankparity/partition.hpp"

using namespace crankparity;

namespace {

const Series& g_cached() {
  static const Series g = g_series(10001);
  return g;
}

std::int64_t brute_inverse_of_24(std::int64_t m) {
  for (std::int64_t r = 0; r < m; ++r)
    if ((24 * r) % m == 1) return r;
  return -1;
}

}  // namespace

TEST(GSeries, LeadingCoefficients) {
  const Series g = g_series(10);
  const std::vector<long> expected = {1, -3, 2, -1, 5, -5, 3, -5, 6, -10};
  for (int n = 0; n < 10; ++n) EXPECT_EQ(g.coeff(n), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(GSeries, ProductFormsAgree) {
  EXPECT_TRUE(equal_to_order(g_series_euler(2000), g_series_eta(2000), 2000));
}

TEST(GSeries, MatchesCrankOracleFromTwo) {
  const Series& g = g_cached();
  for (int n = 2; n <= 45; ++n) EXPECT_EQ(g.coeff(n), crank_parity_oracle(n)) << n;
  // the documented mismatch at n = 1
  EXPECT_EQ(g.coeff(1), -3);
  EXPECT_EQ(crank_parity_oracle(1), -1);
}

TEST(GSeries, AlternatingSigns) {
  EXPECT_EQ(first_sign_violation(g_cached(), 2000), std::nullopt);
  const Series bad = Series::polynomial(0, {1, -1, 0}, 3);
  EXPECT_EQ(first_sign_violation(bad, 2), 2);
}

TEST(GSeries, FiveNPlusFourDivisibleByFive) {
  const Series& g = g_cached();
  for (int n = 4; n < 2000; n += 5) EXPECT_TRUE(mpz_divisible_ui_p(g.coeff(n).get_mpz_t(), 5)) << n;
}

TEST(FSeries, TwoFormsAgree) {
  EXPECT_TRUE(equal_to_order(f_series_definition(1000), f_series_watson(1000), 1000));
  const Series f = f_series(6);
  EXPECT_EQ(f.coeff(0), 1);
  EXPECT_EQ(f.coeff(1), 1);
}

TEST(Family, Residues) {
  for (int alpha = 0; alpha <= 4; ++alpha)
    EXPECT_EQ(family_residue(alpha), brute_inverse_of_24(ipow(5, 2 * alpha + 1)));
  EXPECT_EQ(family_residue(0), 4);
  EXPECT_EQ(family_residue(1), 99);
  EXPECT_EQ(family_residue(2), 2474);
}

TEST(Family, SweepsToTenThousand) {
  const CongruenceReport r0 = verify_family_congruence(0, 10000, g_cached());
  EXPECT_TRUE(r0.passed());
  EXPECT_EQ(r0.tested_n.size(), 2000u);
  EXPECT_EQ(r0.modulus, 5);

  const CongruenceReport r1 = verify_family_congruence(1, 10000, g_cached());
  EXPECT_TRUE(r1.passed());
  EXPECT_EQ(r1.tested_n.size(), 80u);
  EXPECT_EQ(r1.tested_n.front(), 99);
  EXPECT_EQ(r1.modulus, 25);

  const CongruenceReport r2 = verify_family_congruence(2, 10000, g_cached());
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.tested_n, (std::vector<int>{2474, 5599, 8724}));
  EXPECT_EQ(r2.modulus, 125);
  for (int n : r2.tested_n) EXPECT_EQ((24 * n) % 3125, 1);
}

TEST(Family, NotAllResiduesWork) {
  // 5^(alpha+1) does not divide everything: g(99) is divisible by 25, g(4) is not
  EXPECT_FALSE(mpz_divisible_ui_p(g_cached().coeff(4).get_mpz_t(), 25));
}

TEST(Family, TruncationTooShort) {
  try {
    verify_family_congruence(1, 500, g_series(200));
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required(), 501);
  }
}

TEST(Ramatype, SubsequenceIdentity) {
  const IdentityCheck c = ramatype_check(400, g_cached());
  EXPECT_TRUE(c) << *c.first_mismatch;
  EXPECT_EQ(ramatype_product(10).coeff(0), 5);
  const Series rhs = ramatype_product(200);
  for (int n = 0; n < 200; ++n) EXPECT_TRUE(mpz_divisible_ui_p(rhs.coeff(n).get_mpz_t(), 5));
  EXPECT_THROW(ramatype_check(400, g_series(1000)), TruncationError);
}

TEST(Chan, LowOrderByHand) {
  const Series s = chan_expansion_series(2);
  EXPECT_EQ(s.coeff(0), 1);
  EXPECT_EQ(s.coeff(1), -3);
}

TEST(Chan, ExpansionMatchesG) {
  EXPECT_TRUE(chan_expansion_check(300, g_cached()));
}

TEST(Combproof, BothSidesAndG) {
  EXPECT_EQ(combproof_series(5).coeff(0), 1);
  const IdentityCheck c = combproof_check(300, g_cached());
  EXPECT_TRUE(c);
}

TEST(Combproof, DetectsAPerturbation) {
  Series g = g_cached().truncated(300);
  g = g + Series::monomial(250, 1, 300);
  const IdentityCheck c = combproof_check(300, g);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.first_mismatch, 250);
}

TEST(Weighted, IdentityToForty) {
  const WeightedReport r = weighted_identity_check(40, g_cached());
  EXPECT_TRUE(r.passed());
  std::vector<std::int64_t> p(41, 0);
  p[0] = 1;
  for (int k = 1; k <= 40; ++k)
    for (int m = k; m <= 40; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  std::int64_t total = 0;
  for (int n = 1; n <= 40; ++n) total += p[static_cast<std::size_t>(n)];
  EXPECT_EQ(r.partitions_checked, total);
  EXPECT_EQ(weighted_count(1), -3);
}
