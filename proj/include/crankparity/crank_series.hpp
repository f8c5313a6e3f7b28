#pragma once

// Exact q-series for the crank-parity generating function
//   g(q) = sum (M_e(n) - M_o(n)) q^n = (q;q)_inf / (-q;q)_inf^2
// and the rank-parity mock theta function f(q), together with the identity
// and congruence checks built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crankparity/bigint.hpp"
#include "crankparity/error.hpp"
#include "crankparity/partition.hpp"
#include "crankparity/series.hpp"

namespace crankparity {

/// Outcome of comparing two series expansions to a fixed order.
struct IdentityCheck {
  std::string name;
  int order = 0;
  std::optional<int> first_mismatch;

  bool holds() const { return !first_mismatch.has_value(); }
  explicit operator bool() const { return holds(); }
};

inline IdentityCheck compare_series(std::string name, const Series& lhs, const Series& rhs, int T) {
  return IdentityCheck{std::move(name), T, first_difference(lhs, rhs, T)};
}

inline IdentityCheck all_of(std::string name, const std::vector<IdentityCheck>& parts) {
  IdentityCheck r{std::move(name), 0, std::nullopt};
  for (const auto& p : parts) {
    r.order = r.order == 0 ? p.order : std::min(r.order, p.order);
    if (!p.holds() && (!r.first_mismatch || *p.first_mismatch < *r.first_mismatch))
      r.first_mismatch = p.first_mismatch;
  }
  return r;
}

/// (q;q)_inf (q;q^2)_inf^2, built factor by factor.
inline Series g_series_euler(int T) {
  Series r = euler_factor(1, 1, T);
  for (int a = 1; a < T; a += 2) {
    r = times_binomial(std::move(r), a, -1);
    r = times_binomial(std::move(r), a, -1);
  }
  return r;
}

/// (q;q)_inf^3 / (q^2;q^2)_inf^2, i.e. F(q^2)^2 / F(q)^3 with F = 1/(q;q)_inf.
inline Series g_series_eta(int T) {
  const Series e1 = euler_factor(1, 1, T);
  const Series e2 = euler_factor(2, 2, T);
  Series r = e1 * e1 * e1;
  r = series_div(r, e2);
  return series_div(r, e2);
}

/// Crank-parity generating function to order T, computed two ways which must agree.
inline Series g_series(int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  Series a = g_series_euler(T);
  const Series b = g_series_eta(T);
  if (auto d = first_difference(a, b, T))
    throw Error(ErrorKind::validation, "g(q) product forms disagree at q^" + std::to_string(*d));
  return a;
}

/// sum_{n>=0} q^(n^2) / (-q;q)_n^2
inline Series f_series_definition(int T) {
  Series total = Series::zero(T);
  Series denom_inv = Series::one(T);
  for (long n = 0; n * n < T; ++n) {
    if (n > 0) {
      denom_inv = over_binomial(std::move(denom_inv), static_cast<int>(n), 1);
      denom_inv = over_binomial(std::move(denom_inv), static_cast<int>(n), 1);
    }
    total = total + denom_inv.shifted(static_cast<int>(n * n)).truncated(T);
  }
  return total;
}

/// (1/(q;q)_inf) (1 + 4 sum_{k>=1} (-1)^k q^(k(3k+1)/2) / (1 + q^k))
inline Series f_series_watson(int T) {
  Series inner = Series::one(T);
  for (long k = 1; k * (3 * k + 1) / 2 < T; ++k) {
    const int e = static_cast<int>(k * (3 * k + 1) / 2);
    Series term = over_binomial(Series::monomial(e, (k % 2 == 0) ? 4 : -4, T), static_cast<int>(k), 1);
    inner = inner + term;
  }
  return series_div(inner, euler_factor(1, 1, T));
}

/// Rank-parity mock theta function f(q) to order T, both forms checked.
inline Series f_series(int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  Series a = f_series_definition(T);
  const Series b = f_series_watson(T);
  if (auto d = first_difference(a, b, T))
    throw Error(ErrorKind::validation, "f(q) definition and Watson form disagree at q^" + std::to_string(*d));
  return a;
}

/// First n in [1, n_max] where (-1)^n g(n) is not positive.
inline std::optional<int> first_sign_violation(const Series& g, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const int s = sgn(g.coeff(n));
    if ((n % 2 == 0 && s <= 0) || (n % 2 == 1 && s >= 0)) return n;
  }
  return std::nullopt;
}

struct CongruenceReport {
  int alpha = 0;
  BigInt modulus;               // 5^(alpha+1)
  std::int64_t residue = 0;     // n is tested iff n == residue (mod 5^(2 alpha + 1))
  std::vector<int> tested_n;
  std::vector<int> failures;

  bool passed() const { return failures.empty(); }
};

/// The residue r with 24 r == 1 (mod 5^(2 alpha + 1)).
inline std::int64_t family_residue(int alpha) {
  if (alpha < 0 || alpha > 12) throw Error(ErrorKind::invalid_input, "alpha must lie in [0, 12]");
  return mod_inverse(24, ipow(5, 2 * alpha + 1));
}

inline CongruenceReport verify_family_congruence(int alpha, int n_max, const Series& g) {
  if (g.trunc() <= n_max)
    throw TruncationError(n_max + 1, "congruence sweep to n = " + std::to_string(n_max));
  CongruenceReport report;
  report.alpha = alpha;
  report.residue = family_residue(alpha);
  const std::int64_t step = ipow(5, 2 * alpha + 1);
  mpz_ui_pow_ui(report.modulus.get_mpz_t(), 5, static_cast<unsigned long>(alpha + 1));
  for (std::int64_t n = report.residue; n <= n_max; n += step) {
    if (n < 1) continue;
    report.tested_n.push_back(static_cast<int>(n));
    const BigInt c = g.coeff(static_cast<int>(n));
    if (!mpz_divisible_p(c.get_mpz_t(), report.modulus.get_mpz_t()))
      report.failures.push_back(static_cast<int>(n));
  }
  return report;
}

inline CongruenceReport verify_family_congruence(int alpha, int n_max) {
  return verify_family_congruence(alpha, n_max, g_series(n_max + 1));
}

/// 5 (q;q^2)^2 (q^5;q^5) (q^10;q^10)^2 / (q^2;q^2)^2
inline Series ramatype_product(int T) {
  Series r = euler_factor(5, 5, T) * euler_factor(10, 10, T);
  r = r * euler_factor(10, 10, T);
  for (int a = 1; a < T; a += 2) {
    r = times_binomial(std::move(r), a, -1);
    r = times_binomial(std::move(r), a, -1);
  }
  const Series e2 = euler_factor(2, 2, T);
  r = series_div(series_div(r, e2), e2);
  return 5 * std::move(r);
}

/// sum_{n < T} g(5n + 4) q^n, read off g.
inline Series ramatype_subsequence(const Series& g, int T) {
  if (g.trunc() < 5 * T)
    throw TruncationError(5 * T, "5n+4 subsequence to order " + std::to_string(T));
  std::vector<BigInt> v(static_cast<std::size_t>(T));
  for (int n = 0; n < T; ++n) v[static_cast<std::size_t>(n)] = g.coeff(5 * n + 4);
  return Series(0, std::move(v));
}

inline IdentityCheck ramatype_check(int T, const Series& g) {
  return compare_series("ramatype", ramatype_subsequence(g, T), ramatype_product(T), T);
}

inline IdentityCheck ramatype_check(int T) { return ramatype_check(T, g_series(5 * T)); }

/// 1/(q;q)_inf + 4 sum_{n>=1} (-1)^n q^(n(n+1)/2) / [(q;q)_{n-1} (1-q^{2n}) (q^{n+1};q)_inf].
/// The summand for n starts at q^(n(n+1)/2), so only finitely many matter below T.
inline Series chan_expansion_series(int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  Series total = series_div(Series::one(T), euler_factor(1, 1, T));
  // 1 / [(q;q)_{n-1} (q^{n+1};q)_inf], advanced one n at a time
  Series base = series_div(Series::one(T), euler_factor(2, 1, T));
  for (long n = 1; n * (n + 1) / 2 < T; ++n) {
    if (n > 1) {
      base = times_binomial(std::move(base), static_cast<int>(n), -1);
      base = over_binomial(std::move(base), static_cast<int>(n - 1), -1);
    }
    Series term = base.shifted(static_cast<int>(n * (n + 1) / 2)).truncated(T);
    term = over_binomial(std::move(term), static_cast<int>(2 * n), -1);
    total = total + ((n % 2 == 0) ? 4 : -4) * std::move(term);
  }
  return total;
}

/// sum_{n>=0} (-1)^n q^(n(n+1)/2) (1-q^{n+1}) / [(q;q)_n (1+q^{n+1}) (q^{n+2};q)_inf]
inline Series combproof_series(int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  Series total = Series::zero(T);
  // 1 / [(q;q)_n (q^{n+2};q)_inf]
  Series base = series_div(Series::one(T), euler_factor(2, 1, T));
  for (long n = 0; n * (n + 1) / 2 < T; ++n) {
    if (n > 0) {
      base = times_binomial(std::move(base), static_cast<int>(n + 1), -1);
      base = over_binomial(std::move(base), static_cast<int>(n), -1);
    }
    Series term = base.shifted(static_cast<int>(n * (n + 1) / 2)).truncated(T);
    term = times_binomial(std::move(term), static_cast<int>(n + 1), -1);
    term = over_binomial(std::move(term), static_cast<int>(n + 1), 1);
    total = (n % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline IdentityCheck chan_expansion_check(int T, const Series& g) {
  return compare_series("chan", chan_expansion_series(T), g, T);
}

inline IdentityCheck chan_expansion_check(int T) { return chan_expansion_check(T, g_series(T)); }

/// Both sides of the identity against each other, and the right side against g.
inline IdentityCheck combproof_check(int T, const Series& g) {
  const Series rhs = combproof_series(T);
  return all_of("combproof", {compare_series("combproof-sides", chan_expansion_series(T), rhs, T),
                              compare_series("combproof-g", rhs, g, T)});
}

inline IdentityCheck combproof_check(int T) { return combproof_check(T, g_series(T)); }

struct WeightedReport {
  int n_max = 0;
  std::int64_t partitions_checked = 0;
  std::optional<Partition> omega_mismatch;  // a partition with omega != omega1
  std::optional<int> sum_mismatch;          // an n where sum omega != g(n)

  bool passed() const { return !omega_mismatch && !sum_mismatch; }
};

/// Exhaustive check over every partition of 1..n_max: omega == omega1, and the
/// omega-weighted count equals the coefficient of q^n in g (including n = 1).
inline WeightedReport weighted_identity_check(int n_max, const Series& g) {
  if (g.trunc() <= n_max) throw TruncationError(n_max + 1, "weighted identity sweep");
  WeightedReport r;
  r.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t sum = 0;
    for_each_partition(n, false, [&](const Partition& p) {
      const int w = weight_omega(p);
      if (!r.omega_mismatch && w != weight_omega1(p)) r.omega_mismatch = p;
      sum += w;
      ++r.partitions_checked;
    });
    if (!r.sum_mismatch && g.coeff(n) != sum) r.sum_mismatch = n;
  }
  return r;
}

}  // namespace crankparity
