#pragma once

#include <cstdint>
#include <stdexcept>

#include "cfruns/numeric.hpp"
#include "cfruns/word.hpp"

namespace cfruns {

/// Exact convergent state of a continued fraction [d_1, d_2, ...] in [0,1):
/// p_k/q_k after k appended digits, with
///   p_{-1} = 1, p_0 = 0, q_{-1} = 0, q_0 = 1,
///   p_k = d_k p_{k-1} + p_{k-2},  q_k = d_k q_{k-1} + q_{k-2}.
/// The determinant p_k q_{k-1} - p_{k-1} q_k = (-1)^{k-1} holds throughout.
class Convergent {
 public:
  Convergent() : p_prev_(1), p_cur_(0), q_prev_(0), q_cur_(1), k_(0) {}

  void append_digit(Digit d) {
    if (d < 1) throw std::invalid_argument("partial quotient must be >= 1");
    BigInt p_next = d * p_cur_ + p_prev_;
    BigInt q_next = d * q_cur_ + q_prev_;
    p_prev_.swap(p_cur_);
    q_prev_.swap(q_cur_);
    p_cur_ = std::move(p_next);
    q_cur_ = std::move(q_next);
    ++k_;
  }

  static Convergent of(const Word& w) {
    Convergent c;
    for (Digit d : w) c.append_digit(d);
    return c;
  }

  const BigInt& p_prev() const noexcept { return p_prev_; }
  const BigInt& p_cur() const noexcept { return p_cur_; }
  const BigInt& q_prev() const noexcept { return q_prev_; }
  const BigInt& q_cur() const noexcept { return q_cur_; }
  std::size_t order() const noexcept { return k_; }

  /// p_k q_{k-1} - p_{k-1} q_k, always (-1)^{k-1}.
  BigInt determinant() const { return p_cur_ * q_prev_ - p_prev_ * q_cur_; }

  /// The value p_k/q_k of the truncated expansion (k >= 1).
  Rational value() const {
    if (k_ == 0) throw std::logic_error("convergent value undefined at order 0");
    return Rational(p_cur_, q_cur_);
  }

 private:
  BigInt p_prev_, p_cur_, q_prev_, q_cur_;
  std::size_t k_;
};

}  // namespace cfruns
