#pragma once

// Crank and rank parity over partitions into distinct parts: pentagonal
// number utilities, the six-case closed form for the crank difference, the
// q-series identities behind it, and the multiplicative T(24n+1) formula for
// the rank difference.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crankparity/bigint.hpp"
#include "crankparity/crank_series.hpp"
#include "crankparity/error.hpp"
#include "crankparity/partition.hpp"
#include "crankparity/series.hpp"

namespace crankparity {

inline std::int64_t pentagonal(std::int64_t m) { return m * (3 * m + 1) / 2; }

struct PentagonalInfo {
  std::int64_t n = 0;
  bool is_pent = false;
  std::int64_t R = 0;  // meaningful only when is_pent
  std::int64_t floor_p = 0;
  std::int64_t ceil_p = 0;
  std::int64_t R_floor = 0;
  std::int64_t R_ceil = 0;
};

/// Pentagonal floor and ceiling of n >= 0. The pentagonal numbers in
/// increasing order come from m = 0, -1, 1, -2, 2, ...
inline PentagonalInfo pent_info(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::invalid_input, "pent_info needs n >= 0");
  PentagonalInfo info;
  info.n = n;
  std::int64_t prev_m = 0;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t m = (k % 2 == 1) ? -(k + 1) / 2 : k / 2;
    if (pentagonal(prev_m) == n) {
      info.is_pent = true;
      info.R = prev_m;
      info.floor_p = info.ceil_p = n;
      info.R_floor = info.R_ceil = prev_m;
      return info;
    }
    if (pentagonal(m) > n) {
      info.floor_p = pentagonal(prev_m);
      info.R_floor = prev_m;
      info.ceil_p = pentagonal(m);
      info.R_ceil = m;
      return info;
    }
    prev_m = m;
  }
}

enum class FormulaCase {
  pent_odd_positive,      //  1
  pent_other,             // -1
  floor_odd_positive,     //  2, same parity as the floor
  floor_even_positive,    // -2, same parity as the floor
  floor_even_negative,    // -2 (-1)^(n - floor)
  otherwise,              //  0
};

inline const char* to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::pent_odd_positive: return "pentagonal, R odd positive";
    case FormulaCase::pent_other: return "pentagonal, other R";
    case FormulaCase::floor_odd_positive: return "floor R odd positive, same parity";
    case FormulaCase::floor_even_positive: return "floor R even positive, same parity";
    case FormulaCase::floor_even_negative: return "floor R even negative";
    case FormulaCase::otherwise: return "otherwise";
  }
  return "unknown";
}

inline bool odd(std::int64_t x) { return x % 2 != 0; }

inline FormulaCase formula_case(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "the distinct-crank formula is stated for n >= 1");
  const PentagonalInfo p = pent_info(n);
  if (p.is_pent) return (odd(p.R) && p.R > 0) ? FormulaCase::pent_odd_positive : FormulaCase::pent_other;
  const bool same = !odd(n - p.floor_p);
  const std::int64_t R = p.R_floor;
  if (R > 0 && odd(R) && same) return FormulaCase::floor_odd_positive;
  if (R > 0 && !odd(R) && same) return FormulaCase::floor_even_positive;
  if (R < 0 && !odd(R)) return FormulaCase::floor_even_negative;
  return FormulaCase::otherwise;
}

/// M_e(D,n) - M_o(D,n) from the six-case closed form.
inline int exact_formula(std::int64_t n) {
  switch (formula_case(n)) {
    case FormulaCase::pent_odd_positive: return 1;
    case FormulaCase::pent_other: return -1;
    case FormulaCase::floor_odd_positive: return 2;
    case FormulaCase::floor_even_positive: return -2;
    case FormulaCase::floor_even_negative: return odd(n - pent_info(n).floor_p) ? 2 : -2;
    case FormulaCase::otherwise: return 0;
  }
  return 0;
}

/// Coefficient of q^n in (1/(1+q)) sum_{m>=1} q^(m(3m+1)/2) (1 - q^(2m+1)), by cases on R(floor_p(n)).
inline int a_of_n(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "a(n) needs n >= 1");
  const PentagonalInfo p = pent_info(n);
  const int s = odd(n - p.floor_p) ? -1 : 1;
  const std::int64_t R = p.R_floor;
  if (R > 0) return odd(R) ? s : -s;
  return odd(R) ? 0 : -2 * s;
}

/// Coefficient of q^n in -q (q^2;q)_inf, by cases on R(ceil_p(n)).
inline int b_of_n(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "b(n) needs n >= 1");
  const std::int64_t R = pent_info(n).R_ceil;
  if (R > 0) return 0;
  return odd(R) ? -1 : 1;
}

/// sum_{n>=1} (-1)^(n+1) q^(n(n+3)/2) / (-q;q)_n
inline Series distinct_part1_lhs(int T) {
  Series total = Series::zero(T);
  Series base = Series::one(T);  // 1 / (-q;q)_n
  for (long n = 1; n * (n + 3) / 2 < T; ++n) {
    base = over_binomial(std::move(base), static_cast<int>(n), 1);
    const Series term = base.shifted(static_cast<int>(n * (n + 3) / 2)).truncated(T);
    total = odd(n) ? total + term : total - term;
  }
  return total;
}

/// sum_{n>=1} (-1)^n q^(n(n+1)/2) / (q;q)_{n-1}
inline Series distinct_part2_lhs(int T) {
  Series total = Series::zero(T);
  Series base = Series::one(T);  // 1 / (q;q)_{n-1}
  for (long n = 1; n * (n + 1) / 2 < T; ++n) {
    if (n > 1) base = over_binomial(std::move(base), static_cast<int>(n - 1), -1);
    const Series term = base.shifted(static_cast<int>(n * (n + 1) / 2)).truncated(T);
    total = odd(n) ? total - term : total + term;
  }
  return total;
}

/// The two-sum generating function read off from the definition of the crank.
inline Series distinct_crank_series(int T) {
  if (T < 2) throw Error(ErrorKind::invalid_truncation, "need T >= 2");
  return distinct_part1_lhs(T) + distinct_part2_lhs(T);
}

/// (1/(1+q)) sum_{n>=1} q^(n(3n+1)/2) (1 - q^(2n+1))
inline Series aofn_series(int T) {
  std::vector<BigInt> v(static_cast<std::size_t>(T));
  for (long n = 1; pentagonal(n) < T; ++n) {
    v[static_cast<std::size_t>(pentagonal(n))] += 1;
    if (pentagonal(n) + 2 * n + 1 < T) v[static_cast<std::size_t>(pentagonal(n) + 2 * n + 1)] -= 1;
  }
  return over_binomial(Series(0, std::move(v)), 1, 1);
}

/// -q (q^2;q)_inf
inline Series bofn_series(int T) {
  if (T < 2) return Series::zero(T);
  return -(euler_factor(2, 1, T - 1).shifted(1));
}

inline Series informative_rhs(int T) { return aofn_series(T) + bofn_series(T); }

struct InformativeReport {
  IdentityCheck two_sum;               // definition == informative right side
  IdentityCheck part1;
  IdentityCheck part2;
  std::optional<std::int64_t> formula_mismatch;  // first n with coefficient != exact_formula(n)

  bool holds() const { return two_sum.holds() && part1.holds() && part2.holds() && !formula_mismatch; }
  explicit operator bool() const { return holds(); }
};

inline InformativeReport informative_series_check(int T) {
  if (T < 2) throw Error(ErrorKind::invalid_truncation, "need T >= 2");
  const Series p1 = distinct_part1_lhs(T);
  const Series p2 = distinct_part2_lhs(T);
  const Series a = aofn_series(T);
  const Series b = bofn_series(T);
  InformativeReport r{compare_series("informative", p1 + p2, a + b, T), compare_series("part1", p1, a, T),
                      compare_series("part2", p2, b, T), std::nullopt};
  const Series lhs = p1 + p2;
  for (int n = 1; n < T; ++n)
    if (lhs.coeff(n) != exact_formula(n)) {
      r.formula_mismatch = n;
      break;
    }
  return r;
}

/// sum_{n>=0} (-1)^n q^(n(n+5)/2) / (-q^2;q)_n  against  sum_{n>=0} q^((3n^2+7n)/2) (1 - q^(2n+3))
inline IdentityCheck watson_whipple_specialization_check(int T) {
  if (T < 2) throw Error(ErrorKind::invalid_truncation, "need T >= 2");
  Series lhs = Series::zero(T);
  Series base = Series::one(T);  // 1 / (-q^2;q)_n
  for (long n = 0; n * (n + 5) / 2 < T; ++n) {
    if (n > 0) base = over_binomial(std::move(base), static_cast<int>(n + 1), 1);
    const Series term = base.shifted(static_cast<int>(n * (n + 5) / 2)).truncated(T);
    lhs = odd(n) ? lhs - term : lhs + term;
  }
  std::vector<BigInt> v(static_cast<std::size_t>(T));
  for (long n = 0; (3 * n * n + 7 * n) / 2 < T; ++n) {
    const long e = (3 * n * n + 7 * n) / 2;
    v[static_cast<std::size_t>(e)] += 1;
    if (e + 2 * n + 3 < T) v[static_cast<std::size_t>(e + 2 * n + 3)] -= 1;
  }
  return compare_series("watson-whipple", lhs, Series(0, std::move(v)), T);
}

/// sum_{n>=0} q^(n(n+1)/2) / (-q;q)_n, the generating function of N_e(D,n) - N_o(D,n).
inline Series distinct_rank_series(int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  Series total = Series::zero(T);
  Series base = Series::one(T);
  for (long n = 0; n * (n + 1) / 2 < T; ++n) {
    if (n > 0) base = over_binomial(std::move(base), static_cast<int>(n), 1);
    total = total + base.shifted(static_cast<int>(n * (n + 1) / 2)).truncated(T);
  }
  return total;
}

struct SignedFactorization {
  std::vector<std::pair<std::int64_t, int>> factors;  // (p, e) with p == 1 (mod 6), |p| prime
};

inline std::int64_t mod24(std::int64_t p) { return ((p % 24) + 24) % 24; }

/// m = prod p^e with every p == 1 (mod 6): primes 1 mod 6 kept positive,
/// primes 5 mod 6 negated.
inline SignedFactorization signed_factorization(std::int64_t m) {
  if (m <= 1 || m % 6 != 1) throw Error(ErrorKind::invalid_input, "signed factorization needs m > 1, m == 1 (mod 6)");
  SignedFactorization f;
  std::int64_t r = m;
  auto take = [&](std::int64_t q) {
    int e = 0;
    while (r % q == 0) {
      r /= q;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(q % 6 == 1 ? q : -q, e);
  };
  for (std::int64_t q = 5; q * q <= r; q += 2) take(q);
  if (r > 1) take(r);
  std::int64_t prod = 1;
  for (const auto& [p, e] : f.factors) prod *= ipow(p, e);
  if (prod != m) throw Error(ErrorKind::validation, "signed factorization of " + std::to_string(m) + " is inconsistent");
  return f;
}

/// T(24n+1) as the product of T(p^e). For p == 1 (mod 24) and odd e the value
/// T(p) in {2, -2} is taken from prime_values; even e gives e+1 either way.
inline std::int64_t adh_T(std::int64_t n, const std::map<std::int64_t, int>& prime_values) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "adh_T needs n >= 1");
  std::int64_t t = 1;
  for (const auto& [p, e] : signed_factorization(24 * n + 1).factors) {
    const std::int64_t r = mod24(p);
    if (r != 1) {
      if (e % 2 == 1) return 0;
      if (r == 7) t *= (e / 2) % 2 == 0 ? 1 : -1;
      continue;
    }
    if (e % 2 == 0) {
      t *= e + 1;
      continue;
    }
    auto it = prime_values.find(p);
    if (it == prime_values.end())
      throw Error(ErrorKind::bootstrap_needed, "T(" + std::to_string(p) + ") is not known (needed for n = " +
                                                    std::to_string(n) + ")");
    t *= it->second == 2 ? e + 1 : -(e + 1);
  }
  return t;
}

struct PrimeBootstrap {
  std::map<std::int64_t, int> values;
  std::optional<std::int64_t> gauge_prime;  // negative prime whose sign was fixed by convention
};

/// Reads T(p) for p == 1 (mod 24) off known values N_e(D,n) - N_o(D,n)
/// (values[n], n >= 1), in increasing n. When n brings in one unknown prime
/// it is solved for directly. Flipping T(p) for every negative p at once never
/// changes a nonzero T(24n+1), so the first time two unknown negative primes
/// appear together the one of smaller absolute value is set to 2.
inline PrimeBootstrap bootstrap_prime_values(const std::vector<std::int64_t>& values) {
  PrimeBootstrap out;
  for (std::size_t n = 1; n < values.size(); ++n) {
    std::int64_t known = 1;
    std::vector<std::pair<std::int64_t, int>> unknown;
    for (const auto& [p, e] : signed_factorization(24 * static_cast<std::int64_t>(n) + 1).factors) {
      const std::int64_t r = mod24(p);
      if (r != 1) {
        if (e % 2 == 1) known = 0;
        else if (r == 7 && (e / 2) % 2 == 1) known = -known;
        continue;
      }
      if (e % 2 == 0) {
        known *= e + 1;
      } else if (auto it = out.values.find(p); it != out.values.end()) {
        known *= it->second == 2 ? e + 1 : -(e + 1);
      } else {
        known *= e + 1;
        unknown.emplace_back(p, e);
      }
    }
    if (known == 0 || unknown.empty()) continue;
    if (unknown.size() == 2 && !out.gauge_prime && unknown[0].first < 0 && unknown[1].first < 0) {
      auto& fix = (-unknown[0].first < -unknown[1].first) ? unknown[0] : unknown[1];
      out.values[fix.first] = 2;
      out.gauge_prime = fix.first;
      unknown.erase(unknown.begin() + (&fix - unknown.data()));
    }
    if (unknown.size() != 1) continue;
    const std::int64_t v = values[n];
    if (v != known && v != -known)
      throw Error(ErrorKind::validation, "value at n = " + std::to_string(n) + " is incompatible with the T(p) rules");
    out.values[unknown[0].first] = v == known ? 2 : -2;
  }
  return out;
}

/// N_e(D,n) - N_o(D,n) for 0 <= n <= n_max by enumeration (entry 0 unused).
inline std::vector<std::int64_t> distinct_rank_oracle_values(int n_max) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n_max + 1));
  for (int n = 1; n <= n_max; ++n) v[static_cast<std::size_t>(n)] = distinct_rank_parity_oracle(n);
  return v;
}

struct AdhReport {
  int n_max = 0;
  PrimeBootstrap bootstrap;
  std::optional<int> first_mismatch;
  std::vector<int> unresolved;  // n for which T(24n+1) could not be evaluated

  bool passed() const { return !first_mismatch && unresolved.empty(); }
};

/// T(24n+1) against values[n] for 1 <= n < values.size(), with prime values
/// bootstrapped from the same data.
inline AdhReport adh_check(const std::vector<std::int64_t>& values) {
  AdhReport r;
  r.n_max = static_cast<int>(values.size()) - 1;
  r.bootstrap = bootstrap_prime_values(values);
  for (int n = 1; n <= r.n_max; ++n) {
    try {
      if (adh_T(n, r.bootstrap.values) != values[static_cast<std::size_t>(n)] && !r.first_mismatch) r.first_mismatch = n;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::bootstrap_needed) throw;
      r.unresolved.push_back(n);
    }
  }
  return r;
}

}  // namespace crankparity
