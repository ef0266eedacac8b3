#pragma once

// Midpoint-radius ball arithmetic on top of MPFR.
//
// A Scalar is a pair (m, r) such that the exact real value x satisfies
// |x - m| <= r. The midpoint is kept at a working precision derived from a
// decimal digit count; the radius is a short MPFR number that is only ever
// rounded upward. Every operation adds the propagated radius plus one ulp of
// the midpoint whenever MPFR reports an inexact result.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "sombor/error.hpp"

namespace sombor {

inline constexpr int kMinDigits = 15;
inline constexpr int kDefaultDigits = 50;

inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 10;
}

class Scalar {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 32;

  explicit Scalar(int digits = kDefaultDigits) : digits_(digits) {
    if (digits < 1) throw Error(ErrorKind::invalid_argument, "precision must be positive");
    mpfr_init2(mid_, bits_for_digits(digits));
    mpfr_init2(rad_, kRadiusBits);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
  }

  Scalar(const Scalar& other) : digits_(other.digits_) {
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, kRadiusBits);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }

  Scalar(Scalar&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, MPFR_PREC_MIN);
    swap(other);
  }

  Scalar& operator=(Scalar other) noexcept {
    swap(other);
    return *this;
  }

  ~Scalar() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
  }

  void swap(Scalar& other) noexcept {
    std::swap(digits_, other.digits_);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }

  static Scalar integer(long value, int digits = kDefaultDigits) {
    Scalar s(digits);
    s.finish(mpfr_set_si(s.mid_, value, MPFR_RNDN));
    return s;
  }

  static Scalar rational(long num, long den, int digits = kDefaultDigits) {
    if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
    Scalar s = integer(num, digits);
    s /= den;
    return s;
  }

  /// Ball with the given midpoint and radius; the midpoint string is parsed
  /// with rounding error folded into the radius.
  static Scalar from_string(const std::string& midpoint, double radius, int digits = kDefaultDigits) {
    Scalar s(digits);
    if (mpfr_set_str(s.mid_, midpoint.c_str(), 10, MPFR_RNDN) != 0)
      throw Error(ErrorKind::parse_error, "not a decimal number: " + midpoint);
    s.add_ulp();
    s.add_radius(radius);
    return s;
  }

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(mid_); }
  mpfr_srcptr midpoint() const noexcept { return mid_; }
  mpfr_srcptr radius() const noexcept { return rad_; }

  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }
  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }

  /// Lower and upper ends of the enclosure, rounded outward to doubles.
  double lower_double() const { return bound_double(false); }
  double upper_double() const { return bound_double(true); }

  /// Midpoint with `sig` significant decimal digits in scientific notation.
  std::string midpoint_string(int sig) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(sig - 1, 0), mid_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Radius enclosing the true value around the printed midpoint_string(sig),
  /// i.e. the ball radius plus the decimal conversion error, rounded up.
  std::string radius_string(int sig) const {
    mpfr_t r, conv, scale;
    mpfr_init2(r, kRadiusBits);
    mpfr_init2(conv, kRadiusBits);
    mpfr_init2(scale, kRadiusBits);
    mpfr_abs(conv, mid_, MPFR_RNDU);
    mpfr_set_si(scale, 10, MPFR_RNDU);
    mpfr_pow_si(scale, scale, 1 - std::max(sig, 1), MPFR_RNDU);
    mpfr_mul(conv, conv, scale, MPFR_RNDU);
    mpfr_add(r, rad_, conv, MPFR_RNDU);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.3RUe", r);
    std::string out(buf);
    mpfr_free_str(buf);
    mpfr_clear(r);
    mpfr_clear(conv);
    mpfr_clear(scale);
    return out;
  }

  Scalar& operator+=(const Scalar& b) { return combine(b, mpfr_add); }
  Scalar& operator-=(const Scalar& b) { return combine(b, mpfr_sub); }

  Scalar& operator*=(const Scalar& b) {
    raise_precision(b);
    // r = |a| rb + |b| ra + ra rb, computed before the midpoint changes
    mpfr_t t, acc;
    mpfr_init2(t, kRadiusBits);
    mpfr_init2(acc, kRadiusBits);
    mpfr_abs_up(t, mid_);
    mpfr_mul(acc, t, b.rad_, MPFR_RNDU);
    mpfr_abs_up(t, b.mid_);
    mpfr_mul(t, t, rad_, MPFR_RNDU);
    mpfr_add(acc, acc, t, MPFR_RNDU);
    mpfr_mul(t, rad_, b.rad_, MPFR_RNDU);
    mpfr_add(rad_, acc, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(acc);
    add_ulp_if(mpfr_mul(mid_, mid_, b.mid_, MPFR_RNDN));
    return *this;
  }

  Scalar& operator*=(long k) {
    mpfr_mul_ui(rad_, rad_, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDU);
    add_ulp_if(mpfr_mul_si(mid_, mid_, k, MPFR_RNDN));
    return *this;
  }

  Scalar& operator/=(long k) {
    if (k == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
    mpfr_div_ui(rad_, rad_, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDU);
    add_ulp_if(mpfr_div_si(mid_, mid_, k, MPFR_RNDN));
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator*(long k, Scalar a) { return a *= k; }
  friend Scalar operator/(Scalar a, long k) { return a /= k; }
  friend Scalar operator-(Scalar a) {
    mpfr_neg(a.mid_, a.mid_, MPFR_RNDN);
    return a;
  }

  friend Scalar exp(const Scalar& x) {
    Scalar out(x.digits_);
    mpfr_set_prec(out.mid_, x.bits());
    // |exp(m + d) - exp(m)| <= exp(m) * expm1(r) for |d| <= r
    if (!mpfr_zero_p(x.rad_)) {
      mpfr_t em, g;
      mpfr_init2(em, kRadiusBits);
      mpfr_init2(g, kRadiusBits);
      mpfr_exp(em, x.mid_, MPFR_RNDU);
      mpfr_expm1(g, x.rad_, MPFR_RNDU);
      mpfr_mul(out.rad_, em, g, MPFR_RNDU);
      mpfr_clear(em);
      mpfr_clear(g);
    }
    out.add_ulp_if(mpfr_exp(out.mid_, x.mid_, MPFR_RNDN));
    return out;
  }

  friend Scalar sqrt(const Scalar& x) {
    Scalar out(x.digits_);
    mpfr_set_prec(out.mid_, x.bits());
    if (mpfr_zero_p(x.rad_)) {
      if (mpfr_sgn(x.mid_) < 0) throw Error(ErrorKind::invalid_argument, "sqrt of a negative number");
      out.add_ulp_if(mpfr_sqrt(out.mid_, x.mid_, MPFR_RNDN));
      return out;
    }
    mpfr_t lo;
    mpfr_init2(lo, x.bits());
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
      // enclosure reaches zero: use [0, sqrt(m + r)]
      mpfr_t hi;
      mpfr_init2(hi, x.bits());
      mpfr_add(hi, x.mid_, x.rad_, MPFR_RNDU);
      if (mpfr_sgn(hi) < 0) {
        mpfr_clear(hi);
        mpfr_clear(lo);
        throw Error(ErrorKind::invalid_argument, "sqrt of a negative number");
      }
      mpfr_sqrt(hi, hi, MPFR_RNDU);
      mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
      out.add_ulp_if(mpfr_set(out.mid_, hi, MPFR_RNDN));
      mpfr_add(out.rad_, out.rad_, hi, MPFR_RNDU);
      mpfr_clear(hi);
      mpfr_clear(lo);
      return out;
    }
    // |sqrt(m + d) - sqrt(m)| <= r / (2 sqrt(m - r))
    mpfr_t den;
    mpfr_init2(den, kRadiusBits);
    mpfr_sqrt(den, lo, MPFR_RNDD);
    mpfr_mul_2ui(den, den, 1, MPFR_RNDD);
    mpfr_div(out.rad_, x.rad_, den, MPFR_RNDU);
    mpfr_clear(den);
    mpfr_clear(lo);
    out.add_ulp_if(mpfr_sqrt(out.mid_, x.mid_, MPFR_RNDN));
    return out;
  }

  /// m - r > 0, evaluated with downward rounding.
  bool certainly_positive() const { return sign_bound(false) > 0; }
  /// m + r < 0, evaluated with upward rounding.
  bool certainly_negative() const { return sign_bound(true) < 0; }
  bool contains_zero() const { return !certainly_positive() && !certainly_negative(); }

  /// Copy with the radius multiplied by `factor` (>= 1).
  Scalar inflated(double factor) const {
    Scalar s(*this);
    mpfr_mul_d(s.rad_, s.rad_, factor, MPFR_RNDU);
    return s;
  }

  /// Same ball carried at a different working precision.
  Scalar with_digits(int digits) const {
    Scalar s(digits);
    s.add_ulp_if(mpfr_set(s.mid_, mid_, MPFR_RNDN));
    mpfr_add(s.rad_, s.rad_, rad_, MPFR_RNDU);
    return s;
  }

 private:
  static void mpfr_abs_up(mpfr_t out, mpfr_srcptr x) { mpfr_abs(out, x, MPFR_RNDU); }

  void finish(int ternary) { add_ulp_if(ternary); }

  void add_ulp_if(int ternary) {
    if (ternary != 0) add_ulp();
  }

  /// Adds 2^(exp(mid) - prec), one unit in the last place of the midpoint.
  void add_ulp() {
    if (mpfr_zero_p(mid_)) return;
    mpfr_t u;
    mpfr_init2(u, kRadiusBits);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
    mpfr_add(rad_, rad_, u, MPFR_RNDU);
    mpfr_clear(u);
  }

  void add_radius(double r) {
    if (!(r >= 0.0)) throw Error(ErrorKind::invalid_argument, "radius must be non-negative");
    mpfr_add_d(rad_, rad_, r, MPFR_RNDU);
  }

  void raise_precision(const Scalar& b) {
    if (b.bits() > bits()) {
      mpfr_prec_round(mid_, b.bits(), MPFR_RNDN);
      digits_ = b.digits_;
    }
  }

  template <class Op>
  Scalar& combine(const Scalar& b, Op op) {
    raise_precision(b);
    mpfr_add(rad_, rad_, b.rad_, MPFR_RNDU);
    add_ulp_if(op(mid_, mid_, b.mid_, MPFR_RNDN));
    return *this;
  }

  int sign_bound(bool upper) const {
    mpfr_t t;
    mpfr_init2(t, bits() + kRadiusBits + 2);
    if (upper)
      mpfr_add(t, mid_, rad_, MPFR_RNDU);
    else
      mpfr_sub(t, mid_, rad_, MPFR_RNDD);
    int s = mpfr_sgn(t);
    mpfr_clear(t);
    return s;
  }

  double bound_double(bool upper) const {
    mpfr_t t;
    mpfr_init2(t, bits() + kRadiusBits + 2);
    if (upper)
      mpfr_add(t, mid_, rad_, MPFR_RNDU);
    else
      mpfr_sub(t, mid_, rad_, MPFR_RNDD);
    double d = mpfr_get_d(t, upper ? MPFR_RNDU : MPFR_RNDD);
    mpfr_clear(t);
    return d;
  }

  int digits_;
  mpfr_t mid_;
  mpfr_t rad_;
};

inline bool certainly_less(const Scalar& a, const Scalar& b) { return (b - a).certainly_positive(); }
inline bool certainly_greater(const Scalar& a, const Scalar& b) { return certainly_less(b, a); }

/// True when the two enclosures share at least one point.
inline bool overlaps(const Scalar& a, const Scalar& b) { return (a - b).contains_zero(); }

/// True when every point of `inner` lies in `outer`.
inline bool contains(const Scalar& outer, const Scalar& inner) {
  mpfr_prec_t p = std::max(outer.bits(), inner.bits()) + 2 * Scalar::kRadiusBits;
  mpfr_t a, b;
  mpfr_init2(a, p);
  mpfr_init2(b, p);
  // outer.lo <= inner.lo
  mpfr_sub(a, outer.midpoint(), outer.radius(), MPFR_RNDU);
  mpfr_sub(b, inner.midpoint(), inner.radius(), MPFR_RNDD);
  bool ok = mpfr_lessequal_p(a, b);
  // inner.hi <= outer.hi
  mpfr_add(a, outer.midpoint(), outer.radius(), MPFR_RNDD);
  mpfr_add(b, inner.midpoint(), inner.radius(), MPFR_RNDU);
  ok = ok && mpfr_lessequal_p(b, a);
  mpfr_clear(a);
  mpfr_clear(b);
  return ok;
}

/// Number of leading decimal digits on which two midpoints agree,
/// -log10(|a - b| / |a|); +infinity when the midpoints are identical.
inline double agreement_digits(const Scalar& a, const Scalar& b) {
  mpfr_t d;
  mpfr_init2(d, std::max(a.bits(), b.bits()) + 2);
  mpfr_sub(d, a.midpoint(), b.midpoint(), MPFR_RNDN);
  if (mpfr_zero_p(d)) {
    mpfr_clear(d);
    return std::numeric_limits<double>::infinity();
  }
  mpfr_div(d, d, a.midpoint(), MPFR_RNDN);
  mpfr_abs(d, d, MPFR_RNDN);
  mpfr_log10(d, d, MPFR_RNDN);
  double out = -mpfr_get_d(d, MPFR_RNDN);
  mpfr_clear(d);
  return out;
}

}  // namespace sombor
