#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cfruns/numeric.hpp"

namespace cfruns {

/// Certified enclosure arithmetic: a closed interval [lo, hi] of MPFR
/// numbers, every operation rounding lo down and hi up. Comparisons are
/// certified: surely_le(a, b) proves a <= b for all represented values.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  explicit Interval(mpfr_prec_t prec = kDefaultPrec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  Interval& operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
    return r;
  }

  static Interval from_bigint(const BigInt& z, mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.backend().data(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.backend().data(), MPFR_RNDU);
    return r;
  }

  static Interval pi(mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  /// Enclosure of log(2).
  static Interval log2(mpfr_prec_t prec = kDefaultPrec) {
    Interval r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
  }

  mpfr_prec_t precision() const noexcept { return prec_; }

  Interval operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }

  Interval operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }

  Interval operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }

  Interval operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo = min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi = max of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  Interval operator/(const Interval& o) const {
    if (o.contains_zero())
      throw std::domain_error("interval division by an interval containing zero");
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  /// Natural log; requires the interval to be strictly positive.
  Interval log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log of non-positive value");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  Interval sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative value");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  /// x^n for strictly positive x; n may be negative.
  Interval pow_int(long n) const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval pow of non-positive base");
    Interval r(prec_);
    if (n >= 0) {
      mpfr_pow_si(r.lo_, lo_, n, MPFR_RNDD);
      mpfr_pow_si(r.hi_, hi_, n, MPFR_RNDU);
    } else {
      mpfr_pow_si(r.lo_, hi_, n, MPFR_RNDD);
      mpfr_pow_si(r.hi_, lo_, n, MPFR_RNDU);
    }
    return r;
  }

  bool contains_zero() const noexcept {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }

  bool contains(const Rational& q) const noexcept {
    return mpfr_cmp_q(lo_, q.backend().data()) <= 0 &&
           mpfr_cmp_q(hi_, q.backend().data()) >= 0;
  }

  /// Certified: every value of *this is <= every value of o.
  bool surely_le(const Interval& o) const noexcept { return mpfr_cmp(hi_, o.lo_) <= 0; }
  bool surely_lt(const Interval& o) const noexcept { return mpfr_cmp(hi_, o.lo_) < 0; }
  bool surely_le(const Rational& q) const noexcept {
    return mpfr_cmp_q(hi_, q.backend().data()) <= 0;
  }
  bool surely_ge(const Rational& q) const noexcept {
    return mpfr_cmp_q(lo_, q.backend().data()) >= 0;
  }

  double lower_double() const noexcept { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const noexcept { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const noexcept {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
  }
  double width_double() const noexcept {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  /// Decimal rendering of the midpoint, for reports.
  std::string to_string(int digits = 20) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, m);
    mpfr_clear(m);
    return std::string(buf);
  }

  const mpfr_t& lo_raw() const noexcept { return lo_; }
  const mpfr_t& hi_raw() const noexcept { return hi_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace cfruns
