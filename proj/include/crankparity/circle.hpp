#pragma once

// Circle-method asymptotics for the crank-parity coefficients: exact Dedekind
// sums, the exponential sums B_k(n), the cosh main term and its error bound,
// plus a numeric check of the eta transformation law for F = 1/(q;q)_inf.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "crankparity/bigint.hpp"
#include "crankparity/error.hpp"
#include "crankparity/real.hpp"
#include "crankparity/series.hpp"

namespace crankparity {

/// s(h,k) = sum_{r=1}^{k-1} ((r/k)) ((hr/k)) in exact rationals.
inline Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k < 1 || gcd64(h, k) != 1)
    throw Error(ErrorKind::invalid_pair, "dedekind_sum needs k >= 1 and gcd(h,k) = 1");
  // ((r/k)) = (2r - k) / 2k for 0 < r < k
  BigInt acc = 0;
  const std::int64_t hm = ((h % k) + k) % k;
  for (std::int64_t r = 1; r < k; ++r) {
    const std::int64_t hr = (hm * r) % k;
    acc += BigInt(2 * r - k) * BigInt(2 * hr - k);
  }
  return make_rational(acc, BigInt(4) * BigInt(k) * BigInt(k));
}

namespace detail {

/// x reduced into [0, 2).
inline Rational mod2(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), BigInt(2 * x.get_den()).get_mpz_t());
  Rational r = x - Rational(2 * q);
  r.canonicalize();
  return r;
}

/// exp(pi i x) for rational x.
inline Complex expi_pi(const Rational& x, mpfr_prec_t bits) {
  return Complex::cis(Real(mod2(x), bits) * Real::pi(bits));
}

}  // namespace detail

/// B_k(n) = sum over 0 < h < 2k, gcd(h, 2k) = 1 of exp(pi i (2 s(h,k) - 3 s(h,2k) - n h / k)).
/// The sum is real; an imaginary part above 2^(-bits/2) is reported as a precision error.
inline Real B_k(std::int64_t k, std::int64_t n, mpfr_prec_t bits) {
  if (k < 1) throw Error(ErrorKind::invalid_input, "B_k needs k >= 1");
  Complex total(bits);
  for (std::int64_t h = 1; h < 2 * k; ++h) {
    if (gcd64(h, 2 * k) != 1) continue;
    const Rational angle = 2 * dedekind_sum(h, k) - 3 * dedekind_sum(h, 2 * k) - make_rational(n * h, k);
    total = total + detail::expi_pi(angle, bits);
  }
  if (abs(total.im) >= Real::pow2(-static_cast<long>(bits) / 2, bits))
    throw Error(ErrorKind::precision, "B_" + std::to_string(k) + "(" + std::to_string(n) +
                                          ") has imaginary part " + total.im.to_string(6));
  return total.re;
}

/// (1/sqrt(n - 1/24)) sum_{0 < k < 5 sqrt(n) / 2} (B_k(n) / sqrt k) cosh((pi/k) sqrt((n - 1/24)/6))
inline Real main_term(std::int64_t n, mpfr_prec_t bits) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "main_term needs n >= 1");
  const Real x(make_rational(24 * n - 1, 24), bits);
  const Real pi = Real::pi(bits);
  const Real root = sqrt(x / 6L);
  Real total(bits);
  for (std::int64_t k = 1; 4 * k * k < 25 * n; ++k) {
    const Real rk(static_cast<long>(k), bits);
    total += B_k(k, n, bits) / sqrt(rk) * cosh(pi / rk * root);
  }
  return total / sqrt(x);
}

struct AsymptoticReport {
  std::int64_t n = 0;
  BigInt exact;
  Real main;
  Real abs_error;
  Real bound;  // 194 n^(1/4)
  bool pass = false;

  Real relative_error() const { return abs_error / abs(Real(exact, abs_error.precision())); }
};

inline Real error_bound(std::int64_t n, mpfr_prec_t bits) {
  return 194L * sqrt(sqrt(Real(static_cast<long>(n), bits)));
}

inline AsymptoticReport asymptotic_report(std::int64_t n, const BigInt& exact, mpfr_prec_t bits) {
  AsymptoticReport r;
  r.n = n;
  r.exact = exact;
  r.main = main_term(n, bits);
  r.abs_error = abs(Real(exact, bits) - r.main);
  r.bound = error_bound(n, bits);
  r.pass = r.abs_error < r.bound;
  return r;
}

/// One report per n in [n_lo, n_hi], in order. With `parallel` the range is
/// split across hardware threads; the output does not depend on it.
inline std::vector<AsymptoticReport> verify_error_bound(std::int64_t n_lo, std::int64_t n_hi, const Series& g,
                                                        mpfr_prec_t bits = 128, bool parallel = false) {
  if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorKind::invalid_input, "need 1 <= n_lo <= n_hi");
  if (g.trunc() <= n_hi) throw TruncationError(n_hi + 1, "asymptotic sweep to n = " + std::to_string(n_hi));
  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<AsymptoticReport> out(count);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < count; i += step) {
      const auto n = n_lo + static_cast<std::int64_t>(i);
      out[i] = asymptotic_report(n, g.coeff(static_cast<int>(n)), bits);
    }
  };
  const unsigned threads = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return out;
}

namespace detail {

/// 1 / prod_{n>=1} (1 - q^n), stopping once |q^n| drops below 2^-(bits+16).
inline Complex partition_function(const Complex& q, mpfr_prec_t bits) {
  const Real one(1L, bits);
  if (abs(q) >= one) throw Error(ErrorKind::domain, "F(q) needs |q| < 1");
  const Real tiny = Real::pow2(-static_cast<long>(bits) - 16, bits);
  Complex prod(one, Real(bits));
  Complex t = q;
  const Complex unit(one, Real(bits));
  for (long n = 1;; ++n) {
    prod = prod * (unit - t);
    if (abs(t) < tiny) break;
    if (n > 50000000) throw Error(ErrorKind::domain, "product for F(q) does not converge in practice");
    t = t * q;
  }
  return unit / prod;
}

}  // namespace detail

/// |LHS - RHS| of
///   F(exp(2 pi i h/k - 2 pi z/k^2))
///     = exp(pi i s(h,k)) (z/k)^(1/2) exp(pi/(12 z) - pi z/(12 k^2)) F(exp(2 pi i H/k - 2 pi/z))
/// with h H == -1 (mod k).
inline Real eta_transformation_check(std::int64_t h, std::int64_t k, const Complex& z, mpfr_prec_t bits) {
  if (k < 1 || gcd64(h, k) != 1) throw Error(ErrorKind::invalid_pair, "need k >= 1 and gcd(h,k) = 1");
  const Real zero(bits);
  if (z.re <= zero) throw Error(ErrorKind::domain, "need Re(z) > 0");
  const std::int64_t H = k == 1 ? 0 : (k - mod_inverse(h, k)) % k;
  const Real pi = Real::pi(bits);
  const Real rk(static_cast<long>(k), bits);
  const Real two_pi = 2L * pi;

  const Complex q1 = exp(Complex(-(two_pi / (rk * rk)) * z.re, -(two_pi / (rk * rk)) * z.im)) *
                     detail::expi_pi(make_rational(2 * h, k), bits);
  const Complex inv_z = Complex(Real(1L, bits), zero) / z;
  const Complex q2 = exp(Complex(-two_pi * inv_z.re, -two_pi * inv_z.im)) * detail::expi_pi(make_rational(2 * H, k), bits);

  const Complex lhs = detail::partition_function(q1, bits);
  const Complex z_over_k(z.re / rk, z.im / rk);
  const Real c = pi / (12L * rk * rk);
  const Complex expo(pi / 12L * inv_z.re - c * z.re, pi / 12L * inv_z.im - c * z.im);
  const Complex rhs = detail::expi_pi(dedekind_sum(h, k), bits) * sqrt(z_over_k) * exp(expo) *
                      detail::partition_function(q2, bits);
  return abs(lhs - rhs);
}

}  // namespace crankparity
