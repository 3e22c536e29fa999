#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "cfruns/numeric.hpp"

namespace cfruns {

/// A point of [0,1) presented as a shrinking interval with exact rational
/// bounds. refine() narrows the enclosure by at least a factor 2 per call.
/// Successive enclosures are nested. A degenerate enclosure (lower == upper)
/// represents an exact rational; refine() is then a no-op.
class CertifiedReal {
 public:
  using Refiner = std::function<std::pair<Rational, Rational>()>;

  CertifiedReal(Rational lower, Rational upper, Refiner refiner)
      : lower_(std::move(lower)), upper_(std::move(upper)), refiner_(std::move(refiner)) {
    validate(lower_, upper_);
  }

  const Rational& lower() const noexcept { return lower_; }
  const Rational& upper() const noexcept { return upper_; }
  bool is_exact() const noexcept { return lower_ == upper_; }

  void refine() {
    if (is_exact() || !refiner_) return;
    auto [lo, hi] = refiner_();
    validate(lo, hi);
    // Nestedness is part of the contract; intersect to enforce it.
    if (lo < lower_) lo = lower_;
    if (hi > upper_) hi = upper_;
    if (lo > hi) throw std::logic_error("refiner produced an interval disjoint from the previous one");
    lower_ = std::move(lo);
    upper_ = std::move(hi);
  }

  /// An exact rational point of [0,1).
  static CertifiedReal from_rational(const Rational& r) {
    return CertifiedReal(r, r, nullptr);
  }

  /// pi - 3, enclosed by exact rational partial sums of the Machin formula
  /// pi = 16 arctan(1/5) - 4 arctan(1/239). Both arctangent series alternate
  /// with decreasing terms, so consecutive partial sums bracket the limit;
  /// each refinement doubles the number of terms.
  static CertifiedReal pi_minus_3() {
    auto terms = std::make_shared<unsigned long>(4);
    auto bounds = [](unsigned long n) {
      auto [lo5, hi5] = atan_recip_bounds(5, n);
      auto [lo239, hi239] = atan_recip_bounds(239, n);
      Rational lo = 16 * lo5 - 4 * hi239 - 3;
      Rational hi = 16 * hi5 - 4 * lo239 - 3;
      return std::make_pair(lo, hi);
    };
    auto [lo0, hi0] = bounds(*terms);
    return CertifiedReal(lo0, hi0, [terms, bounds]() {
      *terms *= 2;
      return bounds(*terms);
    });
  }

  /// sqrt(2) - 1, enclosed by dyadic integer-square-root bounds; each
  /// refinement doubles the number of fractional bits.
  static CertifiedReal sqrt2_minus_1() { return dyadic_sqrt(2, 0, 1, -1); }

  /// (sqrt(5) - 1)/2, the reciprocal golden ratio.
  static CertifiedReal inv_golden() { return dyadic_sqrt(5, 1, 2, -1); }

 private:
  static void validate(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("certified real: lower > upper");
    if (lo < 0 || hi >= 1)
      throw std::invalid_argument("certified real bounds must lie in [0,1)");
  }

  /// Exact rational bounds on arctan(1/x) from n terms of the alternating
  /// series sum_j (-1)^j / ((2j+1) x^(2j+1)).
  static std::pair<Rational, Rational> atan_recip_bounds(unsigned long x, unsigned long n) {
    Rational sum = 0;
    BigInt xpow = x;  // x^(2j+1)
    BigInt x2 = BigInt(x) * x;
    for (unsigned long j = 0; j < n; ++j) {
      Rational term(BigInt(1), BigInt(2 * j + 1) * xpow);
      if (j % 2 == 0)
        sum += term;
      else
        sum -= term;
      xpow *= x2;
    }
    // remainder has the sign of (-1)^n and magnitude at most the next term
    Rational next(BigInt(1), BigInt(2 * n + 1) * xpow);
    if (n % 2 == 0) return {sum, sum + next};
    return {sum - next, sum};
  }

  /// (sqrt(d) + add) / den with dyadic integer-square-root bounds.
  static CertifiedReal dyadic_sqrt(unsigned long d, long den, long add) {
    auto bits = std::make_shared<unsigned long>(64);
    auto bounds = [d, den, add](unsigned long b) {
      BigInt scale = pow2(b);
      BigInt s = isqrt(BigInt(d) * scale * scale);
      Rational lo = Rational(s + add * scale, den * scale);
      Rational hi = Rational(s + 1 + add * scale, den * scale);
      return std::make_pair(lo, hi);
    };
    auto [lo0, hi0] = bounds(*bits);
    return CertifiedReal(lo0, hi0, [bits, bounds]() {
      *bits *= 2;
      return bounds(*bits);
    });
  }

  Rational lower_, upper_;
  Refiner refiner_;
};

}  // namespace cfruns
