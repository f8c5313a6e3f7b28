#include <gtest/gtest.h>

#include "crankparity/fivetower.hpp"

using namespace crankparity;

namespace {

GLaurentPoly row(const std::vector<BigInt>& r) {
  GLaurentPoly p;
  for (std::size_t j = 0; j < r.size(); ++j) p.set(static_cast<int>(j), r[j]);
  return p;
}

const ABMatrices& ab() {
  static const ABMatrices m = compute_AB(6, 25 * 6 + 60);
  return m;
}

}  // namespace

TEST(GLaurentPoly, Arithmetic) {
  const GLaurentPoly a{{-1, 2}, {0, -1}};
  const GLaurentPoly b{{1, 1}};
  EXPECT_EQ((a * b), (GLaurentPoly{{0, 2}, {1, -1}}));
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ(a.to_string(), "2G^-1 - 1");
  EXPECT_EQ((GLaurentPoly{{1, 5}, {2, -25}}).to_string(), "5G - 25G^2");
  EXPECT_EQ((GLaurentPoly{{3, 10}}).div_monomial(GLaurentPoly{{1, 5}}), (GLaurentPoly{{2, 2}}));
  EXPECT_THROW((GLaurentPoly{{3, 7}}).divexact(5), Error);
}

TEST(Reduce, Identity) {
  GBasis basis(60);
  EXPECT_EQ(reduce_to_G(basis.g(), 1, 1, basis), (GLaurentPoly{{1, 1}}));
}

TEST(Reduce, FOverUFiveIsFiveG) {
  GBasis basis(80);
  const Series fu = apply_U(5, eta_quotient(kFSpec, 400));
  EXPECT_EQ(reduce_to_G(fu, 0, 6, basis), (GLaurentPoly{{1, 5}}));
}

TEST(Reduce, RejectsNonPolynomials) {
  GBasis basis(60);
  const Series g2 = basis.power(2).truncated(50);
  try {
    reduce_to_G(g2, 0, 1, basis);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_g_polynomial);
  }
  // a pole below jmin
  try {
    reduce_to_G(basis.power(-2).truncated(40), -1, 0, basis);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_g_polynomial);
  }
  EXPECT_THROW(reduce_to_G(basis.power(3).truncated(4), 0, 5, basis), TruncationError);
}

TEST(Reduce, PartialKnowsOnlyLowColumns) {
  GBasis basis(60);
  const Series x = (BigInt(3) * basis.power(1) + BigInt(7) * basis.power(30)).truncated(20);
  const GReduction r = reduce_partial(x, 1, 40, basis);
  EXPECT_EQ(r.known_below, 20);
  EXPECT_EQ(r.poly, (GLaurentPoly{{1, 3}}));
}

TEST(Keystone, FOverUFiveToTwoThousand) {
  const IdentityCheck c = keystone_check(2000);
  EXPECT_TRUE(c);
  EXPECT_EQ(c.order, 2000);
}

TEST(ClosedForms, ExpectedPolynomials) {
  const auto forms = closed_forms();
  ASSERT_EQ(forms.size(), 8u);
  for (const auto& f : forms) EXPECT_TRUE(f.holds()) << f.name << ": " << f.computed.to_string();
  EXPECT_EQ(forms[6].computed, (GLaurentPoly{{-2, 6}, {0, -5}}));
  EXPECT_EQ(forms[7].computed, (GLaurentPoly{{-2, 1}, {-1, 5}, {0, -25}}));
}

TEST(ClosedForms, LeadingCoefficients) {
  // phi^-4|U5 = 6q^-2 + 24q^-1 + 31 + O(q); F phi^-4|U5 = q^-2 + 9q^-1 - 9 + O(q)
  const Series phi_inv = inverse(eta_quotient(kPhiSpec, 200));
  const Series p4 = phi_inv * phi_inv * phi_inv * phi_inv;
  const Series u = apply_U(5, p4);
  EXPECT_EQ(u.coeff(-2), 6);
  EXPECT_EQ(u.coeff(-1), 24);
  EXPECT_EQ(u.coeff(0), 31);
  const Series fu = apply_U_product(5, eta_quotient(kFSpec, 200), p4);
  EXPECT_EQ(fu.coeff(-2), 1);
  EXPECT_EQ(fu.coeff(-1), 9);
  EXPECT_EQ(fu.coeff(0), -9);
}

TEST(Matrices, RowZero) {
  EXPECT_EQ(row(ab().A[0]), (GLaurentPoly{{0, 1}}));
  EXPECT_EQ(row(ab().B[0]), (GLaurentPoly{{1, 5}}));
}

TEST(Matrices, RowsReexpandToLongerOrder) {
  // entries found at a short truncation reproduce G^i|U5 and F G^i|U5 much further out
  GBasis long_basis(2000);
  const Series f = eta_quotient(kFSpec, 2000);
  for (int i = 1; i <= 6; ++i) {
    const Series& gi = long_basis.power(i);
    const Series a_img = apply_U(5, gi);
    const Series b_img = apply_U_product(5, f, gi);
    const int T = 300;
    EXPECT_TRUE(equal_to_order(to_series(row(ab().A[static_cast<std::size_t>(i)]), long_basis, T), a_img, T)) << i;
    EXPECT_TRUE(equal_to_order(to_series(row(ab().B[static_cast<std::size_t>(i)]), long_basis, T), b_img, T)) << i;
  }
}

TEST(Matrices, RowOneRegression) {
  // values from an independent prototype computation
  EXPECT_EQ(row(ab().A[1]), (GLaurentPoly{{1, 11}, {2, -60}, {3, 175}, {4, -250}, {5, 125}}));
  EXPECT_EQ(row(ab().B[1]), (GLaurentPoly{{1, -20}, {2, 305}, {3, -1475}, {4, 3875}, {5, -5625}, {6, 3125}}));
}

TEST(Matrices, ValuationLemmas) {
  EXPECT_TRUE(check_AB_valuations(ab()).empty());
  // the second condition has teeth: b_{1j} and b_{6j} are all divisible by 5
  for (int i : {1, 6})
    for (const auto& c : ab().B[static_cast<std::size_t>(i)]) EXPECT_TRUE(mpz_divisible_ui_p(c.get_mpz_t(), 5));
  EXPECT_EQ(lemma_bound(1, 1), 0);
  EXPECT_EQ(lemma_bound(6, 1), -1);
  EXPECT_EQ(lemma_bound(1, 6), 4);
}

TEST(Matrices, ValuationCheckFlagsBadEntries) {
  ABMatrices m = ab();
  m.B[1][1] = 7;  // i == 1 (mod 5) needs a factor of 5
  const auto bad = check_AB_valuations(m);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].matrix, 'B');
  EXPECT_EQ(bad[0].i, 1);
  EXPECT_EQ(bad[0].j, 1);
}

TEST(Newton, SigmasAndRecurrence) {
  const NewtonSigmas ns = newton_sigmas();
  EXPECT_EQ(ns.validated_mu, (std::vector<int>{5, 6, 7, -5, -6}));
  EXPECT_EQ(ns.phi_U.at(-1), (GLaurentPoly{{0, 1}}));
  EXPECT_EQ(ns.phi_U.at(-2), (GLaurentPoly{{-1, 2}, {0, -1}}));
  EXPECT_EQ(ns.phi_U.at(-3), (GLaurentPoly{{-1, 6}, {0, -5}}));
  EXPECT_EQ(ns.phi_U.at(-4), (GLaurentPoly{{-2, 6}, {0, -5}}));
  // regression values from an independent prototype computation
  EXPECT_EQ(ns.sigma[4], (GLaurentPoly{{3, 1}}));
  EXPECT_EQ(ns.sigma[0], (GLaurentPoly{{1, 5}, {2, -25}, {3, 25}}));
  for (int k = 0; k < 5; ++k) EXPECT_LE(ns.sigma[static_cast<std::size_t>(k)].max_exponent(), 3);
}

TEST(Newton, CoefficientValuations) {
  // pi(c_{mu nu}) >= floor((5 nu - 3 mu - 1) / 6) for phi^mu|U5 = sum c_{mu nu} G^nu
  const NewtonSigmas ns = newton_sigmas();
  for (const auto& [mu, poly] : ns.phi_U)
    for (const auto& [nu, c] : poly.terms())
      EXPECT_GE(valuation5(c), floor_div(5 * nu - 3 * mu - 1, 6)) << "mu " << mu << " nu " << nu;
}

TEST(Ladder, SeriesAndMatrixFormsAgree) {
  const auto states = ladder(2, 21);
  ASSERT_EQ(states.size(), 5u);
  EXPECT_EQ(states[0].gpoly, (GLaurentPoly{{1, 5}}));
  EXPECT_TRUE(states[0].complete);
  EXPECT_EQ(states[0].series.coeff(1), 5);
  EXPECT_TRUE(states[2].complete);
  EXPECT_EQ(states[2].degree_bound, 26);
  for (const auto& st : states) {
    EXPECT_EQ(st.gpoly, st.matrix_gpoly) << st.nu;
    EXPECT_TRUE(sgn(st.gpoly.coeff(0)) == 0);
    EXPECT_GE(st.gpoly.min_exponent(), 1);
  }
  for (const auto& [j, c] : states[2].gpoly.terms()) EXPECT_TRUE(mpz_divisible_ui_p(c.get_mpz_t(), 25)) << j;
  for (const auto& [j, c] : states[4].gpoly.terms()) EXPECT_TRUE(mpz_divisible_ui_p(c.get_mpz_t(), 125)) << j;
  EXPECT_TRUE(check_ladder_valuations(states).empty());
}

TEST(Ladder, BoundsAndBudget) {
  EXPECT_EQ(ladder_bound(1, 1), 1);
  EXPECT_EQ(ladder_bound(3, 4), 3);
  EXPECT_EQ(ladder_bound(4, 4), 4);
  try {
    ladder(3, 21);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
  }
}

TEST(ClaimL, AlphaZeroAndOne) {
  EXPECT_EQ(claim_shift(0), 1);
  EXPECT_EQ(claim_shift(1), 26);
  EXPECT_TRUE(claimL_check(0, 200));
  EXPECT_TRUE(claimL_check(1, 41));
}

TEST(ClaimL, NeedsEnoughG) {
  try {
    claimL_check(1, 41, g_series(1000));
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required(), 125 * 40 - 26 + 1);
  }
}
