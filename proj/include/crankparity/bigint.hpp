#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "crankparity/error.hpp"

namespace crankparity {

using BigInt = mpz_class;
using Rational = mpq_class;

// p-adic valuation; zero has infinite valuation, reported as int max.
inline int valuation(const BigInt& x, unsigned long p) {
  if (sgn(x) == 0) return std::numeric_limits<int>::max();
  BigInt r = x;
  int v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline int valuation5(const BigInt& x) { return valuation(x, 5); }

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// num/den in lowest terms with positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::invalid_input, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && (r < 0 ? -r : r) > std::numeric_limits<std::int64_t>::max() / (base < 0 ? -base : base))
      throw Error(ErrorKind::invalid_input, "integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

// Floor division for possibly negative numerators.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Inverse of a modulo m (m > 1) by the extended Euclidean algorithm.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw Error(ErrorKind::invalid_input, "no modular inverse");
  return ((t0 % m) + m) % m;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace crankparity
