#pragma once

// Truncated Laurent series in q with exact integer coefficients.
//
// A Series stores the coefficients of q^offset, ..., q^(trunc-1). Every
// coefficient below trunc is exact; nothing at or above trunc is known, and
// asking for it throws TruncationError. Results of arithmetic carry the
// tightest truncation that the operands justify.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crankparity/bigint.hpp"
#include "crankparity/error.hpp"

namespace crankparity {

class Series {
 public:
  /// Coefficients of q^offset, q^(offset+1), ...; trunc = offset + size.
  Series(int offset, std::vector<BigInt> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw Error(ErrorKind::invalid_truncation, "series needs trunc > offset");
    normalize();
  }

  static Series zero(int trunc) { return Series(trunc - 1, std::vector<BigInt>(1)); }

  static Series one(int trunc) { return monomial(0, 1, trunc); }

  static Series monomial(int exponent, const BigInt& c, int trunc) {
    if (exponent >= trunc) return zero(trunc);
    std::vector<BigInt> v(static_cast<std::size_t>(trunc - exponent));
    v[0] = c;
    return Series(exponent, std::move(v));
  }

  /// Exact polynomial (given from `offset` upward) viewed to order `trunc`.
  static Series polynomial(int offset, const std::vector<BigInt>& coeffs, int trunc) {
    if (trunc <= offset) return zero(trunc);
    std::vector<BigInt> v(static_cast<std::size_t>(trunc - offset));
    for (std::size_t i = 0; i < coeffs.size() && i < v.size(); ++i) v[i] = coeffs[i];
    return Series(offset, std::move(v));
  }

  int offset() const noexcept { return offset_; }
  int trunc() const noexcept { return offset_ + static_cast<int>(coeffs_.size()); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

  /// Lowest exponent with a nonzero coefficient, or trunc for the zero series.
  int valuation() const { return is_zero() ? trunc() : offset_; }

  BigInt coeff(int exponent) const {
    if (exponent >= trunc())
      throw TruncationError(exponent + 1, "coefficient of q^" + std::to_string(exponent) +
                                              " is beyond truncation " + std::to_string(trunc()));
    if (exponent < offset_) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
  }

  BigInt operator[](int exponent) const { return coeff(exponent); }

  Series truncated(int new_trunc) const {
    if (new_trunc > trunc())
      throw TruncationError(new_trunc, "cannot extend a series past its truncation");
    if (new_trunc <= offset_) return zero(new_trunc);
    return Series(offset_, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + (new_trunc - offset_)));
  }

  /// Multiplication by q^k.
  Series shifted(int k) const {
    Series r = *this;
    r.offset_ += k;
    return r;
  }

  /// f(q) -> f(q^d); the result is known below d * trunc.
  Series dilated(int d) const {
    if (d < 1) throw Error(ErrorKind::invalid_input, "dilation factor must be positive");
    const int new_trunc = trunc() * d;
    const int new_off = offset_ * d;
    std::vector<BigInt> v(static_cast<std::size_t>(new_trunc - new_off));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(d)] = coeffs_[i];
    return Series(new_off, std::move(v));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) { return add(a, b, 1); }
  friend Series operator-(const Series& a, const Series& b) { return add(a, b, -1); }

  friend Series operator*(const BigInt& k, Series x) {
    for (auto& c : x.coeffs_) c *= k;
    x.normalize();
    return x;
  }
  friend Series operator*(long k, Series x) { return BigInt(k) * std::move(x); }

  friend Series operator*(const Series& x, const Series& y);
  friend Series series_div(const Series& x, const Series& y);
  friend Series divexact(Series x, const BigInt& k);
  friend Series times_binomial(Series x, int m, int sign);
  friend Series over_binomial(Series x, int m, int sign);
  friend Series apply_U(int d, const Series& x);
  friend Series apply_U_product(int d, const Series& x, const Series& y);

 private:
  static Series add(const Series& a, const Series& b, int sign) {
    const int t = std::min(a.trunc(), b.trunc());
    const int off = std::min(a.offset_, b.offset_);
    if (t <= off) return zero(t);
    std::vector<BigInt> v(static_cast<std::size_t>(t - off));
    for (int e = a.offset_; e < t; ++e) v[static_cast<std::size_t>(e - off)] = a.coeffs_[static_cast<std::size_t>(e - a.offset_)];
    for (int e = b.offset_; e < t; ++e) {
      auto& slot = v[static_cast<std::size_t>(e - off)];
      if (sign > 0)
        slot += b.coeffs_[static_cast<std::size_t>(e - b.offset_)];
      else
        slot -= b.coeffs_[static_cast<std::size_t>(e - b.offset_)];
    }
    return Series(off, std::move(v));
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      offset_ += static_cast<int>(lead);
    }
  }

  int offset_;
  std::vector<BigInt> coeffs_;
};

namespace detail {

inline std::vector<std::pair<int, const BigInt*>> nonzeros(const std::vector<BigInt>& v, std::size_t limit) {
  std::vector<std::pair<int, const BigInt*>> nz;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i)
    if (sgn(v[i]) != 0) nz.emplace_back(static_cast<int>(i), &v[i]);
  return nz;
}

}  // namespace detail

/// Cauchy product. Iterates over the nonzero terms of the sparser factor, so
/// products with lacunary series (Euler products, theta series) are cheap.
inline Series operator*(const Series& x, const Series& y) {
  const int off = x.offset_ + y.offset_;
  const int t = std::min(x.trunc() + y.offset_, y.trunc() + x.offset_);
  const auto len = static_cast<std::size_t>(t - off);
  std::vector<BigInt> r(len);
  auto nx = detail::nonzeros(x.coeffs_, len);
  auto ny = detail::nonzeros(y.coeffs_, len);
  const bool x_outer = nx.size() <= ny.size();
  const auto& outer = x_outer ? nx : ny;
  const auto& inner = x_outer ? y.coeffs_ : x.coeffs_;
  for (const auto& [i, a] : outer) {
    const std::size_t stop = std::min(inner.size(), len - static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < stop; ++j) {
      if (sgn(inner[j]) == 0) continue;
      mpz_addmul(r[static_cast<std::size_t>(i) + j].get_mpz_t(), a->get_mpz_t(), inner[j].get_mpz_t());
    }
  }
  return Series(off, std::move(r));
}

/// Power-series division x / y. The leading coefficient of y must be +-1, or
/// every step of the recurrence must divide exactly.
inline Series series_div(const Series& x, const Series& y) {
  if (y.is_zero()) throw Error(ErrorKind::non_unit_divisor, "division by the zero series");
  const int yo = y.offset_;
  const int off = x.offset_ - yo;
  const int t = std::min(x.trunc() - yo, x.offset_ + y.trunc() - 2 * yo);
  if (t <= off) return Series::zero(t);
  const auto len = static_cast<std::size_t>(t - off);
  const BigInt& lead = y.coeffs_[0];
  const bool unit = (lead == 1 || lead == -1);
  auto ny = detail::nonzeros(y.coeffs_, len);
  std::vector<BigInt> z(len);
  BigInt acc;
  for (std::size_t n = 0; n < len; ++n) {
    acc = n < x.coeffs_.size() ? x.coeffs_[n] : BigInt(0);
    for (const auto& [i, yi] : ny) {
      if (i == 0) continue;
      if (static_cast<std::size_t>(i) > n) break;
      mpz_submul(acc.get_mpz_t(), yi->get_mpz_t(), z[n - static_cast<std::size_t>(i)].get_mpz_t());
    }
    if (unit) {
      z[n] = lead * acc;
    } else {
      if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
        throw Error(ErrorKind::non_unit_divisor,
                    "inexact integer division at q^" + std::to_string(off + static_cast<int>(n)));
      mpz_divexact(z[n].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    }
  }
  return Series(off, std::move(z));
}

inline Series inverse(const Series& y) {
  return series_div(Series::one(y.trunc() - y.offset()), y);
}

inline Series divexact(Series x, const BigInt& k) {
  for (auto& c : x.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
      throw Error(ErrorKind::non_unit_divisor, "series is not divisible by " + to_decimal(k));
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return x;
}

/// x * (1 + sign*q^m), m >= 1; truncation is unchanged.
inline Series times_binomial(Series x, int m, int sign) {
  auto& c = x.coeffs_;
  for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(m);) {
    if (sign > 0)
      c[i] += c[i - static_cast<std::size_t>(m)];
    else
      c[i] -= c[i - static_cast<std::size_t>(m)];
  }
  x.normalize();
  return x;
}

/// x / (1 + sign*q^m), m >= 1; truncation is unchanged.
inline Series over_binomial(Series x, int m, int sign) {
  auto& c = x.coeffs_;
  for (std::size_t i = static_cast<std::size_t>(m); i < c.size(); ++i) {
    if (sign > 0)
      c[i] -= c[i - static_cast<std::size_t>(m)];
    else
      c[i] += c[i - static_cast<std::size_t>(m)];
  }
  x.normalize();
  return x;
}

inline Series power(const Series& x, int n) {
  if (n < 0) return power(inverse(x), -n);
  Series result = Series::one(x.trunc() - x.offset());
  Series base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// prod_{j=0}^{count-1} (1 + sign*q^(a+b*j)) to order T; count < 0 means the
/// infinite product (every factor whose exponent is below T).
inline Series qpoch(int sign, int a, int b, int count, int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  if (a < 1 || b < 1) throw Error(ErrorKind::invalid_input, "q-Pochhammer needs a >= 1 and b >= 1");
  Series r = Series::one(T);
  for (int j = 0; count < 0 || j < count; ++j) {
    const long e = static_cast<long>(a) + static_cast<long>(b) * j;
    if (e >= T) break;
    r = times_binomial(std::move(r), static_cast<int>(e), sign);
  }
  return r;
}

/// (q^a; q^b)_inf = prod_{k>=0} (1 - q^(a+bk)) truncated at T. The case a == b
/// uses Euler's pentagonal expansion directly.
inline Series euler_factor(int a, int b, int T) {
  if (T < 1) throw Error(ErrorKind::invalid_truncation, "truncation must be positive");
  if (a < 1 || b < 1) throw Error(ErrorKind::invalid_input, "euler_factor needs a >= 1 and b >= 1");
  if (a != b) return qpoch(-1, a, b, -1, T);
  std::vector<BigInt> v(static_cast<std::size_t>(T));
  v[0] = 1;
  for (long k = 1;; ++k) {
    const long e1 = b * (k * (3 * k - 1) / 2);
    const long e2 = b * (k * (3 * k + 1) / 2);
    if (e1 >= T) break;
    const int s = (k % 2 == 0) ? 1 : -1;
    v[static_cast<std::size_t>(e1)] += s;
    if (e2 < T) v[static_cast<std::size_t>(e2)] += s;
  }
  return Series(0, std::move(v));
}

struct EtaFactor {
  int d;  // level multiplier: eta(d*tau)
  int r;  // exponent
};

struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  long weighted_sum() const {
    long s = 0;
    for (const auto& f : factors) s += static_cast<long>(f.d) * f.r;
    return s;
  }
};

/// q^(sum d*r / 24) * prod_n (1 - q^(d n))^r, truncated at T.
inline Series eta_quotient(const EtaQuotientSpec& spec, int T) {
  for (const auto& f : spec.factors)
    if (f.d < 1) throw Error(ErrorKind::invalid_input, "eta level multiplier must be positive");
  const long s = spec.weighted_sum();
  if (s % 24 != 0)
    throw Error(ErrorKind::fractional_exponent,
                "sum of d*r = " + std::to_string(s) + " is not divisible by 24");
  const int off = static_cast<int>(s / 24);
  const int len = T - off;
  if (len < 1) return Series::zero(T);
  Series p = Series::one(len);
  for (const auto& f : spec.factors)
    for (int i = 0; i < f.r; ++i) p = p * euler_factor(f.d, f.d, len);
  for (const auto& f : spec.factors)
    for (int i = 0; i < -f.r; ++i) p = series_div(p, euler_factor(f.d, f.d, len));
  return p.shifted(off);
}

/// sum a(n) q^n | U_d = sum a(d n) q^n. Exponents not divisible by d are
/// dropped; the result is known below ceil(trunc / d).
inline Series apply_U(int d, const Series& x) {
  if (d < 1) throw Error(ErrorKind::invalid_input, "U_d needs d >= 1");
  const auto lo = static_cast<int>(ceil_div(x.offset_, d));
  const auto hi = static_cast<int>(ceil_div(x.trunc(), d));
  if (hi <= lo) return Series::zero(hi);
  std::vector<BigInt> v(static_cast<std::size_t>(hi - lo));
  for (int n = lo; n < hi; ++n) v[static_cast<std::size_t>(n - lo)] = x.coeffs_[static_cast<std::size_t>(d * n - x.offset_)];
  return Series(lo, std::move(v));
}

/// (x * y) | U_d without forming the full product.
inline Series apply_U_product(int d, const Series& x, const Series& y) {
  if (d < 1) throw Error(ErrorKind::invalid_input, "U_d needs d >= 1");
  const int off = x.offset_ + y.offset_;
  const int t = std::min(x.trunc() + y.offset_, y.trunc() + x.offset_);
  const auto lo = static_cast<int>(ceil_div(off, d));
  const auto hi = static_cast<int>(ceil_div(t, d));
  if (hi <= lo) return Series::zero(hi);
  const auto len = static_cast<std::size_t>(t - off);
  auto nx = detail::nonzeros(x.coeffs_, len);
  auto ny = detail::nonzeros(y.coeffs_, len);
  const bool x_outer = nx.size() <= ny.size();
  const auto& outer = x_outer ? nx : ny;
  const Series& in = x_outer ? y : x;
  const int outer_off = x_outer ? x.offset_ : y.offset_;
  std::vector<BigInt> v(static_cast<std::size_t>(hi - lo));
  for (int n = lo; n < hi; ++n) {
    BigInt& acc = v[static_cast<std::size_t>(n - lo)];
    for (const auto& [i, a] : outer) {
      const int e_in = d * n - (outer_off + i) - in.offset_;
      if (e_in < 0) break;
      if (static_cast<std::size_t>(e_in) >= in.coeffs_.size()) continue;
      const BigInt& b = in.coeffs_[static_cast<std::size_t>(e_in)];
      if (sgn(b) != 0) mpz_addmul(acc.get_mpz_t(), a->get_mpz_t(), b.get_mpz_t());
    }
  }
  return Series(lo, std::move(v));
}

/// First exponent below T where a and b differ. Both must be known to T.
inline std::optional<int> first_difference(const Series& a, const Series& b, int T) {
  if (a.trunc() < T || b.trunc() < T)
    throw TruncationError(T, "comparison to order " + std::to_string(T) + " needs both series known that far");
  for (int e = std::min(a.offset(), b.offset()); e < T; ++e)
    if (a.coeff(e) != b.coeff(e)) return e;
  return std::nullopt;
}

inline bool equal_to_order(const Series& a, const Series& b, int T) {
  return !first_difference(a, b, T).has_value();
}

/// Debug dump: one "exponent<TAB>coefficient" line per stored coefficient.
inline void write_dump(std::ostream& os, const Series& s) {
  for (int e = s.offset(); e < s.trunc(); ++e) os << e << '\t' << to_decimal(s.coeff(e)) << '\n';
}

/// Inverse of write_dump. Exponents must be consecutive; the last exponent
/// read fixes the truncation.
inline Series read_dump(std::istream& is) {
  std::vector<BigInt> coeffs;
  std::optional<int> first;
  int expected = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int e = 0;
    std::string c;
    if (!(ls >> e >> c)) throw Error(ErrorKind::invalid_input, "malformed dump line: " + line);
    if (!first) {
      first = e;
      expected = e;
    }
    if (e != expected) throw Error(ErrorKind::invalid_input, "dump exponents are not consecutive");
    coeffs.emplace_back(c, 10);
    ++expected;
  }
  if (!first) throw Error(ErrorKind::invalid_input, "empty series dump");
  return Series(*first, std::move(coeffs));
}

}  // namespace crankparity
