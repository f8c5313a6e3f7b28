#pragma once

// Thin RAII wrapper over MPFR. Each value carries its own precision; the
// result of a binary operation gets the larger of the two operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "crankparity/error.hpp"

namespace crankparity {

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const mpz_class& x, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const mpq_class& x, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  Real(double x, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(v_, x, MPFR_RNDN); }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string to_string(int digits = 20) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  /// Nearest integer (ties away from zero).
  mpz_class round() const {
    mpz_class z;
    Real t(precision());
    mpfr_round(t.v_, v_);
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
    return z;
  }

  friend Real operator+(const Real& a, const Real& b) { return binary(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binary(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binary(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binary(mpfr_div, a, b); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }

  friend Real operator*(long k, const Real& a) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long k) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real sqrt(const Real& a) { return unary(mpfr_sqrt, a); }
  friend Real exp(const Real& a) { return unary(mpfr_exp, a); }
  friend Real log(const Real& a) { return unary(mpfr_log, a); }
  friend Real cos(const Real& a) { return unary(mpfr_cos, a); }
  friend Real sin(const Real& a) { return unary(mpfr_sin, a); }
  friend Real cosh(const Real& a) { return unary(mpfr_cosh, a); }
  friend Real sinh(const Real& a) { return unary(mpfr_sinh, a); }
  friend Real abs(const Real& a) { return unary(mpfr_abs, a); }
  friend Real atan2(const Real& y, const Real& x) { return binary(mpfr_atan2, y, x); }

  /// 2^e at the given precision.
  static Real pow2(long e, mpfr_prec_t bits) {
    Real r(1L, bits);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  template <class Op>
  static Real binary(Op op, const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  template <class Op>
  static Real unary(Op op, const Real& a) {
    Real r(a.precision());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& k, const Complex& a) { return {k * a.re, k * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  Real norm() const { return re * re + im * im; }
  friend Real abs(const Complex& z) { return sqrt(z.norm()); }

  friend Complex exp(const Complex& z) {
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
  }

  /// exp(i * theta)
  static Complex cis(const Real& theta) { return {cos(theta), sin(theta)}; }

  /// Principal square root (branch cut along the negative real axis).
  friend Complex sqrt(const Complex& z) {
    const mpfr_prec_t bits = z.precision();
    const Real r = abs(z);
    const Real zero(bits);
    if (r == zero) return Complex(bits);
    const Real half(0.5, bits);
    Real a = sqrt(half * (r + abs(z.re)));
    if (z.re >= zero) return {a, z.im / (2L * a)};
    Real b = z.im / (2L * a);
    // re < 0: swap roles, keep the real part non-negative
    if (z.im >= zero) return {abs(b), a};
    return {abs(b), -a};
  }
};

}  // namespace crankparity
