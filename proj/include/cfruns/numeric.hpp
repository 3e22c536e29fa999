#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace cfruns {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// floor(sqrt(n)) for n >= 0, exact.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline BigInt pow2(unsigned long e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

/// Parses a decimal literal ("0.4142", "3", ".5", with optional sign and
/// exponent "1.5e-3") into an exact rational.
inline Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = (text[i] == '-');
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = (text[i] == '-');
      ++i;
    }
    bool has_exp_digit = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') break;
      exp10 = exp10 * 10 + (c - '0');
      has_exp_digit = true;
    }
    if (!has_exp_digit) throw std::invalid_argument("malformed exponent in decimal literal: " + text);
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit || i != text.size())
    throw std::invalid_argument("malformed decimal literal: " + text);
  exp10 -= frac_digits;
  Rational r(mantissa);
  BigInt p10 = 1;
  for (long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) p10 *= 10;
  if (exp10 >= 0)
    r *= Rational(p10);
  else
    r /= Rational(p10);
  if (neg) r = -r;
  return r;
}

}  // namespace cfruns
