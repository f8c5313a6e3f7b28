#pragma once

// The level-10 / level-50 modular machinery behind the mod 5^(alpha+1)
// congruences: the eta quotients F, G and phi, reduction of series to Laurent
// polynomials in the hauptmodul G, the U_5 matrices A and B, the Newton
// sigma polynomials, and the L_nu ladder computed two independent ways.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crankparity/bigint.hpp"
#include "crankparity/crank_series.hpp"
#include "crankparity/error.hpp"
#include "crankparity/series.hpp"

namespace crankparity {

// eta^3(t) eta^2(50t) / (eta^2(2t) eta^3(25t))
inline const EtaQuotientSpec kFSpec{{{1, 3}, {2, -2}, {50, 2}, {25, -3}}};
// eta^2(t) eta^4(10t) / (eta^4(2t) eta^2(5t))
inline const EtaQuotientSpec kGSpec{{{1, 2}, {2, -4}, {10, 4}, {5, -2}}};
// eta(t) eta^2(50t) / (eta^2(2t) eta(25t))
inline const EtaQuotientSpec kPhiSpec{{{1, 1}, {2, -2}, {50, 2}, {25, -1}}};

/// sum_j c_j G^j with finitely many nonzero integer c_j (j may be negative).
class GLaurentPoly {
 public:
  GLaurentPoly() = default;
  GLaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
    for (const auto& [j, c] : terms) set(j, c);
  }

  static GLaurentPoly monomial(int j, const BigInt& c) {
    GLaurentPoly p;
    p.set(j, c);
    return p;
  }

  const std::map<int, BigInt>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  BigInt coeff(int j) const {
    auto it = c_.find(j);
    return it == c_.end() ? BigInt(0) : it->second;
  }

  void set(int j, const BigInt& c) {
    if (sgn(c) == 0)
      c_.erase(j);
    else
      c_[j] = c;
  }

  void add_to(int j, const BigInt& c) { set(j, coeff(j) + c); }

  int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  friend GLaurentPoly operator+(GLaurentPoly a, const GLaurentPoly& b) {
    for (const auto& [j, c] : b.c_) a.add_to(j, c);
    return a;
  }
  friend GLaurentPoly operator-(GLaurentPoly a, const GLaurentPoly& b) {
    for (const auto& [j, c] : b.c_) a.add_to(j, -c);
    return a;
  }
  friend GLaurentPoly operator*(const GLaurentPoly& a, const GLaurentPoly& b) {
    GLaurentPoly r;
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) r.add_to(i + j, x * y);
    return r;
  }
  friend GLaurentPoly operator*(const BigInt& k, const GLaurentPoly& a) {
    GLaurentPoly r;
    for (const auto& [j, c] : a.c_) r.set(j, k * c);
    return r;
  }
  friend bool operator==(const GLaurentPoly& a, const GLaurentPoly& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient by k.
  GLaurentPoly divexact(const BigInt& k) const {
    GLaurentPoly r;
    for (const auto& [j, c] : c_) {
      if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
        throw Error(ErrorKind::validation, "G-polynomial coefficient not divisible by " + to_decimal(k));
      BigInt q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
      r.set(j, q);
    }
    return r;
  }

  /// Exact division by a single-term polynomial c G^m.
  GLaurentPoly div_monomial(const GLaurentPoly& m) const {
    if (m.size() != 1) throw Error(ErrorKind::invalid_input, "divisor is not a monomial in G");
    const auto& [e, c] = *m.c_.begin();
    GLaurentPoly shifted;
    for (const auto& [j, x] : c_) shifted.set(j - e, x);
    return shifted.divexact(c);
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [j, c] : c_) {
      const bool neg = sgn(c) < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (j == 0) {
        s += to_decimal(mag);
        continue;
      }
      if (mag != 1) s += to_decimal(mag);
      s += "G";
      if (j != 1) s += "^" + std::to_string(j);
    }
    return s;
  }

 private:
  std::map<int, BigInt> c_;
};

/// G and its integer powers (negative ones included) to a fixed truncation.
/// Powers are built lazily and cached, so a basis must not be shared between
/// threads while it is still growing.
class GBasis {
 public:
  explicit GBasis(int T) : T_(T) {
    if (T < 3) throw Error(ErrorKind::invalid_truncation, "G basis needs truncation >= 3");
    cache_.emplace(1, eta_quotient(kGSpec, T));
    cache_.emplace(0, Series::one(T));
  }

  int trunc() const { return T_; }
  const Series& g() const { return cache_.at(1); }

  const Series& power(int j) {
    if (auto it = cache_.find(j); it != cache_.end()) return it->second;
    Series p = j > 0 ? power(j - 1) * g() : power(j + 1) * inverse_g();
    return cache_.emplace(j, std::move(p)).first->second;
  }

 private:
  const Series& inverse_g() {
    if (auto it = cache_.find(-1); it != cache_.end()) return it->second;
    return cache_.emplace(-1, inverse(g())).first->second;
  }

  int T_;
  std::map<int, Series> cache_;
};

struct GReduction {
  GLaurentPoly poly;
  int known_below = 0;        // every c_j with j < known_below is determined
  bool residual_zero = true;  // nothing left over below the truncation
};

/// Triangular elimination x = sum_{jmin <= j <= jmax} c_j G^j, from the lowest
/// exponent up. When jmax reaches past the truncation of x only the columns
/// j < trunc are determined and the result is partial.
inline GReduction reduce_partial(const Series& x, int jmin, int jmax, GBasis& basis) {
  if (jmax < jmin) throw Error(ErrorKind::invalid_input, "reduce_to_G needs jmin <= jmax");
  GReduction out;
  const int t = x.trunc();
  out.known_below = std::min(jmax + 1, t);
  if (x.is_zero()) return out;
  const int base = std::min(x.offset(), jmin);
  std::vector<BigInt> w(static_cast<std::size_t>(t - base));
  for (int e = x.offset(); e < t; ++e) w[static_cast<std::size_t>(e - base)] = x.coeff(e);
  for (int e = base; e < std::min(jmin, t); ++e)
    if (sgn(w[static_cast<std::size_t>(e - base)]) != 0)
      throw Error(ErrorKind::not_g_polynomial,
                  "coefficient of q^" + std::to_string(e) + " lies below G^" + std::to_string(jmin));
  for (int j = jmin; j <= jmax && j < t; ++j) {
    const BigInt c = w[static_cast<std::size_t>(j - base)];
    if (sgn(c) == 0) continue;
    const Series& p = basis.power(j);
    if (p.trunc() < t)
      throw TruncationError(basis.trunc() + (t - p.trunc()), "G^" + std::to_string(j) + " is not known far enough");
    out.poly.set(j, c);
    const auto& pc = p.coefficients();
    for (int e = p.offset(); e < t; ++e) {
      const BigInt& pe = pc[static_cast<std::size_t>(e - p.offset())];
      if (sgn(pe) != 0) mpz_submul(w[static_cast<std::size_t>(e - base)].get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
    }
  }
  out.residual_zero = std::all_of(w.begin(), w.end(), [](const BigInt& v) { return sgn(v) == 0; });
  return out;
}

/// Full reduction: every coefficient of x up to its truncation must be
/// accounted for by jmin..jmax, else not-a-G-polynomial.
inline GLaurentPoly reduce_to_G(const Series& x, int jmin, int jmax, GBasis& basis) {
  if (x.trunc() <= jmax)
    throw TruncationError(jmax + 1, "full reduction up to G^" + std::to_string(jmax));
  GReduction r = reduce_partial(x, jmin, jmax, basis);
  if (!r.residual_zero)
    throw Error(ErrorKind::not_g_polynomial,
                "nonzero remainder after reducing with G^" + std::to_string(jmin) + "..G^" + std::to_string(jmax));
  return std::move(r.poly);
}

/// sum c_j G^j as a q-series to order T.
inline Series to_series(const GLaurentPoly& p, GBasis& basis, int T) {
  Series s = Series::zero(T);
  for (const auto& [j, c] : p.terms()) s = s + c * basis.power(j).truncated(T);
  return s;
}

/// F|U_5 against 5G to order T.
inline IdentityCheck keystone_check(int T) {
  const Series fu = apply_U(5, eta_quotient(kFSpec, 5 * T));
  const Series g5 = 5 * eta_quotient(kGSpec, T);
  return compare_series("F|U5 = 5G", fu, g5, T);
}

struct ClosedForm {
  std::string name;
  GLaurentPoly expected;
  GLaurentPoly computed;
  bool holds() const { return expected == computed; }
};

/// phi^-mu | U_5 and F phi^-mu | U_5 for mu = 1..4, reduced to G-polynomials,
/// next to their expected closed forms.
inline std::vector<ClosedForm> closed_forms(int T = 300) {
  const int img = T / 5;
  GBasis basis(img + 12);
  const Series phi = eta_quotient(kPhiSpec, T);
  const Series f = eta_quotient(kFSpec, T);
  const Series phi_inv = inverse(phi);
  const std::vector<GLaurentPoly> phi_expected = {
      {{0, 1}}, {{-1, 2}, {0, -1}}, {{-1, 6}, {0, -5}}, {{-2, 6}, {0, -5}}};
  const std::vector<GLaurentPoly> f_expected = {
      {{0, -1}}, {{-1, 1}}, {{0, -5}}, {{-2, 1}, {-1, 5}, {0, -25}}};
  std::vector<ClosedForm> out;
  Series pw = phi_inv;
  for (int mu = 1; mu <= 4; ++mu) {
    if (mu > 1) pw = pw * phi_inv;
    out.push_back({"phi^-" + std::to_string(mu) + "|U5", phi_expected[static_cast<std::size_t>(mu - 1)],
                   reduce_to_G(apply_U(5, pw), -mu, 0, basis)});
    out.push_back({"F phi^-" + std::to_string(mu) + "|U5", f_expected[static_cast<std::size_t>(mu - 1)],
                   reduce_to_G(apply_U_product(5, f, pw), -mu, 1, basis)});
  }
  return out;
}

/// Rows 0..imax of the matrices with G^i|U_5 = sum_j a_ij G^j and
/// F G^i|U_5 = sum_j b_ij G^j. Dense, column index j from 0.
struct ABMatrices {
  int imax = 0;
  std::vector<std::vector<BigInt>> A;
  std::vector<std::vector<BigInt>> B;
};

/// T is the q-series truncation of G^i and F before U_5 is applied.
inline ABMatrices compute_AB(int imax, int T) {
  if (imax < 0) throw Error(ErrorKind::invalid_input, "imax must be non-negative");
  const int img = T / 5;
  if (img <= 5 * imax + 2) throw TruncationError(5 * (5 * imax + 3), "A/B rows up to i = " + std::to_string(imax));
  GBasis power_basis(T);
  GBasis red_basis(img + 2);
  const Series f = eta_quotient(kFSpec, T);
  ABMatrices m;
  m.imax = imax;
  const auto cols = static_cast<std::size_t>(5 * imax + 2);
  for (int i = 0; i <= imax; ++i) {
    const Series& gi = power_basis.power(i);
    const GLaurentPoly a = reduce_to_G(apply_U(5, gi), 0, 5 * i, red_basis);
    const GLaurentPoly b = reduce_to_G(apply_U_product(5, f, gi), 0, 5 * i + 1, red_basis);
    if (i >= 1 && (sgn(a.coeff(0)) != 0 || sgn(b.coeff(0)) != 0))
      throw Error(ErrorKind::validation, "row " + std::to_string(i) + " has a nonzero constant term");
    std::vector<BigInt> ra(cols), rb(cols);
    for (const auto& [j, c] : a.terms()) ra[static_cast<std::size_t>(j)] = c;
    for (const auto& [j, c] : b.terms()) rb[static_cast<std::size_t>(j)] = c;
    m.A.push_back(std::move(ra));
    m.B.push_back(std::move(rb));
  }
  return m;
}

inline int lemma_bound(int i, int j) { return static_cast<int>(floor_div(5 * j - i - 1, 6)); }

struct ValuationViolation {
  char matrix;  // 'A', 'B' or 'L'
  int i;        // row, or nu for the ladder
  int j;
  int valuation;
  int bound;
};

/// Entries with i, j >= 1 violating pi(a_ij), pi(b_ij) >= floor((5j-i-1)/6), or
/// pi(b_ij) >= 1 when i == 1 (mod 5).
inline std::vector<ValuationViolation> check_AB_valuations(const ABMatrices& m) {
  std::vector<ValuationViolation> bad;
  for (int i = 1; i <= m.imax; ++i) {
    const auto& ra = m.A[static_cast<std::size_t>(i)];
    const auto& rb = m.B[static_cast<std::size_t>(i)];
    for (int j = 1; j < static_cast<int>(ra.size()); ++j) {
      const int bound = lemma_bound(i, j);
      const int va = valuation5(ra[static_cast<std::size_t>(j)]);
      if (va < bound) bad.push_back({'A', i, j, va, bound});
      const int vb = valuation5(rb[static_cast<std::size_t>(j)]);
      const int bb = (i % 5 == 1) ? std::max(bound, 1) : bound;
      if (vb < bb) bad.push_back({'B', i, j, vb, bb});
    }
  }
  return bad;
}

struct NewtonSigmas {
  std::array<GLaurentPoly, 5> sigma;  // sigma_1 .. sigma_5
  std::map<int, GLaurentPoly> phi_U;  // phi^mu | U_5 for the mu that were reduced
  std::vector<int> validated_mu;
};

namespace detail {

/// Right side of the Newton recurrence for phi^mu | U_5 given the five previous values.
inline GLaurentPoly newton_step(const std::array<GLaurentPoly, 5>& s, const std::map<int, GLaurentPoly>& u, int mu) {
  GLaurentPoly r;
  for (int i = 1; i <= 5; ++i) {
    const GLaurentPoly term = s[static_cast<std::size_t>(i - 1)] * u.at(mu - i);
    r = (i % 2 == 1) ? r + term : r - term;
  }
  return r;
}

}  // namespace detail

/// sigma_1..sigma_5 from the power sums p_mu = 5 (phi^mu | U_5), checked by
/// running the recurrence forward to mu = 5, 6, 7 and backward to mu = -5, -6.
/// T is the truncation of phi.
inline NewtonSigmas newton_sigmas(int T = 400) {
  const int img = T / 5 - 6;
  if (img < 40) throw TruncationError(5 * 46, "Newton sigma reduction");
  const Series phi = eta_quotient(kPhiSpec, T);
  const Series phi_inv = inverse(phi);
  GBasis basis(img + 16);
  NewtonSigmas out;
  out.phi_U[0] = GLaurentPoly{{0, 1}};
  Series pw = Series::one(T);
  for (int mu = 1; mu <= 7; ++mu) {
    pw = pw * phi;
    out.phi_U[mu] = reduce_to_G(apply_U(5, pw), 0, 3 * mu, basis);
  }
  pw = Series::one(T);
  for (int mu = 1; mu <= 6; ++mu) {
    pw = pw * phi_inv;
    out.phi_U[-mu] = reduce_to_G(apply_U(5, pw), -mu, 0, basis);
  }

  // e_k = (1/k) sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
  std::array<GLaurentPoly, 6> e;
  e[0] = GLaurentPoly{{0, 1}};
  for (int k = 1; k <= 5; ++k) {
    GLaurentPoly acc;
    for (int i = 1; i <= k; ++i) {
      const GLaurentPoly term = e[static_cast<std::size_t>(k - i)] * (BigInt(5) * out.phi_U.at(i));
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    e[static_cast<std::size_t>(k)] = acc.divexact(k);
  }
  for (int k = 0; k < 5; ++k) out.sigma[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k + 1)];

  for (int mu : {5, 6, 7}) {
    if (!(detail::newton_step(out.sigma, out.phi_U, mu) == out.phi_U.at(mu)))
      throw Error(ErrorKind::validation, "Newton recurrence fails at mu = " + std::to_string(mu));
    out.validated_mu.push_back(mu);
  }
  // backward: sigma_5 u_{mu} = u_{mu+5} - sigma_1 u_{mu+4} + sigma_2 u_{mu+3} - sigma_3 u_{mu+2} + sigma_4 u_{mu+1}
  for (int mu : {-5, -6}) {
    GLaurentPoly num = out.phi_U.at(mu + 5);
    for (int i = 1; i <= 4; ++i) {
      const GLaurentPoly term = out.sigma[static_cast<std::size_t>(i - 1)] * out.phi_U.at(mu + 5 - i);
      num = (i % 2 == 1) ? num - term : num + term;
    }
    if (!(num.div_monomial(out.sigma[4]) == out.phi_U.at(mu)))
      throw Error(ErrorKind::validation, "backward Newton recurrence fails at mu = " + std::to_string(mu));
    out.validated_mu.push_back(mu);
  }
  return out;
}

/// L_0 .. L_{nu_max} as series. L_nu is known below 5^(nu_max - nu) T, so
/// L_{nu_max} is known below T.
inline std::vector<Series> ladder_series(int nu_max, int T, std::int64_t budget = 1000000) {
  if (nu_max < 1) throw Error(ErrorKind::invalid_input, "ladder needs nu_max >= 1");
  if (T < 2) throw Error(ErrorKind::invalid_truncation, "ladder needs T >= 2");
  const std::int64_t f_terms = ipow(5, nu_max) * T;
  if (f_terms > budget)
    throw Error(ErrorKind::budget_exceeded, "L_" + std::to_string(nu_max) + " to order " + std::to_string(T) +
                                                " needs F to " + std::to_string(f_terms) +
                                                " terms, over the budget of " + std::to_string(budget));
  const Series f = eta_quotient(kFSpec, static_cast<int>(f_terms));
  std::vector<Series> L;
  L.push_back(Series::one(static_cast<int>(f_terms)));
  for (int nu = 1; nu <= nu_max; ++nu) {
    const auto t = static_cast<int>(ipow(5, nu_max - nu) * T);
    const Series& prev = L.back();
    Series next = (nu % 2 == 1) ? apply_U_product(5, f.truncated(5 * t), prev.truncated(5 * t))
                                : apply_U(5, prev.truncated(5 * t));
    L.push_back(next.truncated(t));
  }
  return L;
}

struct LadderState {
  int nu = 0;
  Series series = Series::one(1);
  GLaurentPoly gpoly;         // from reducing the series
  GLaurentPoly matrix_gpoly;  // from (5,0,0,...)(AB)^alpha [A]
  int known_below = 0;        // both polys are compared on columns j < known_below
  int degree_bound = 0;
  bool complete = false;      // gpoly is the whole of L_nu, verified with zero remainder
};

namespace detail {

inline constexpr int kLadderMargin = 8;

}  // namespace detail

/// L_1 .. L_{2 alpha_max + 1}, each as a series and as a G-polynomial, the
/// polynomial obtained both by reducing the series and by pushing
/// (5,0,0,...) through the matrices. Columns beyond what the truncation
/// determines are left out of both.
inline std::vector<LadderState> ladder(int alpha_max, int T, std::int64_t budget = 1000000) {
  if (alpha_max < 0) throw Error(ErrorKind::invalid_input, "alpha_max must be non-negative");
  const int nu_max = 2 * alpha_max + 1;
  const std::vector<Series> L = ladder_series(nu_max, T, budget);

  std::vector<int> D(static_cast<std::size_t>(nu_max + 1), 0), W(static_cast<std::size_t>(nu_max + 1), 0);
  D[1] = 1;
  for (int nu = 2; nu <= nu_max; ++nu)
    D[static_cast<std::size_t>(nu)] = 5 * D[static_cast<std::size_t>(nu - 1)] + (nu % 2);
  for (int nu = 1; nu <= nu_max; ++nu)
    W[static_cast<std::size_t>(nu)] =
        std::min(L[static_cast<std::size_t>(nu)].trunc(), D[static_cast<std::size_t>(nu)] + 1 + detail::kLadderMargin);

  const Series f = eta_quotient(kFSpec, 5 * *std::max_element(W.begin(), W.end()));
  std::vector<LadderState> out;
  GLaurentPoly vec{{1, 5}};
  for (int nu = 1; nu <= nu_max; ++nu) {
    const int w = W[static_cast<std::size_t>(nu)];
    const int d = D[static_cast<std::size_t>(nu)];
    LadderState st;
    st.nu = nu;
    st.series = L[static_cast<std::size_t>(nu)];
    st.degree_bound = d;
    st.known_below = std::min(w, d + 1);

    GBasis red_basis(w + 2);
    GReduction r = reduce_partial(st.series.truncated(w), 1, d, red_basis);
    if (!r.residual_zero)
      throw Error(ErrorKind::not_g_polynomial, "L_" + std::to_string(nu) + " exceeds its degree bound");
    st.gpoly = std::move(r.poly);
    st.complete = w > d + 1;

    if (nu > 1) {
      // rows i < min(D_prev + 1, 5w); row i of A (nu even) or B (nu odd) to columns < w
      GBasis row_basis(5 * w);
      GLaurentPoly next;
      const int rows = std::min(D[static_cast<std::size_t>(nu - 1)] + 1, 5 * w);
      for (const auto& [i, c] : vec.terms()) {
        if (i >= rows) break;
        const Series& gi = row_basis.power(i);
        const Series img = (nu % 2 == 0) ? apply_U(5, gi) : apply_U_product(5, f.truncated(5 * w), gi);
        GReduction row = reduce_partial(img.truncated(w), 0, d, red_basis);
        next = next + c * row.poly;
      }
      vec = std::move(next);
    }
    GLaurentPoly window;
    for (const auto& [j, c] : vec.terms())
      if (j < st.known_below) window.set(j, c);
    st.matrix_gpoly = window;
    if (!(st.matrix_gpoly == st.gpoly))
      throw Error(ErrorKind::validation, "ladder series and matrix forms disagree at L_" + std::to_string(nu));
    out.push_back(std::move(st));
  }
  return out;
}

/// Lower bound for pi(l_j(nu)): alpha+1+floor((j-1)/2) at nu = 2 alpha + 1,
/// alpha+1+floor(j/2) at nu = 2 alpha + 2.
inline int ladder_bound(int nu, int j) {
  const int alpha = (nu - 1) / 2;
  return nu % 2 == 1 ? alpha + 1 + (j - 1) / 2 : alpha + 1 + j / 2;
}

inline std::vector<ValuationViolation> check_ladder_valuations(const std::vector<LadderState>& states) {
  std::vector<ValuationViolation> bad;
  for (const auto& st : states)
    for (const auto& [j, c] : st.gpoly.terms()) {
      const int v = valuation5(c);
      const int b = ladder_bound(st.nu, j);
      if (v < b) bad.push_back({'L', st.nu, j, v, b});
    }
  return bad;
}

/// Sum of 5^(2i) for i = 0..alpha, so that m = 5^(2 alpha + 1) n - claim_shift(alpha).
inline std::int64_t claim_shift(int alpha) {
  std::int64_t s = 0;
  for (int i = 0; i <= alpha; ++i) s += ipow(25, i);
  return s;
}

/// L_{2 alpha + 1} = (q^10;q^10)^2 / (q^5;q^5)^3 * sum_{n>=1} g(m) q^n with
/// m = 5^(2 alpha + 1) n - claim_shift(alpha), to order T.
inline IdentityCheck claimL_check(int alpha, int T, const Series& g) {
  if (alpha < 0) throw Error(ErrorKind::invalid_input, "alpha must be non-negative");
  const std::int64_t step = ipow(5, 2 * alpha + 1);
  const std::int64_t shift = claim_shift(alpha);
  const std::int64_t need = step * (T - 1) - shift + 1;
  if (g.trunc() < need) throw TruncationError(need, "g coefficients for the L_" + std::to_string(2 * alpha + 1) + " claim");
  std::vector<BigInt> s(static_cast<std::size_t>(T));
  for (int n = 1; n < T; ++n) s[static_cast<std::size_t>(n)] = g.coeff(static_cast<int>(step * n - shift));
  Series rhs = Series(0, std::move(s)) * euler_factor(10, 10, T);
  rhs = rhs * euler_factor(10, 10, T);
  const Series e5 = euler_factor(5, 5, T);
  for (int i = 0; i < 3; ++i) rhs = series_div(rhs, e5);
  const std::vector<Series> L = ladder_series(2 * alpha + 1, T);
  return compare_series("claimL alpha=" + std::to_string(alpha), L.back(), rhs, T);
}

inline IdentityCheck claimL_check(int alpha, int T) {
  const std::int64_t need = ipow(5, 2 * alpha + 1) * (T - 1) - claim_shift(alpha) + 1;
  return claimL_check(alpha, T, g_series(static_cast<int>(std::max<std::int64_t>(need, 2))));
}

}  // namespace crankparity
