#pragma once

#include "cfruns/convergent.hpp"
#include "cfruns/errors.hpp"
#include "cfruns/numeric.hpp"
#include "cfruns/word.hpp"

namespace cfruns {

/// The rank-k cylinder: the interval of points whose first k partial
/// quotients equal a given word. Endpoints are p_k/q_k and
/// (p_k+p_{k-1})/(q_k+q_{k-1}); which is left depends on the parity of k.
/// Diameter is exactly 1/(q_k (q_k + q_{k-1})).
struct Cylinder {
  Word word;
  Rational left;
  Rational right;
  Rational diameter;
};

inline Cylinder cylinder_of(const Word& w) {
  if (w.empty()) throw EmptyWord();
  Convergent c = Convergent::of(w);
  Rational a(c.p_cur(), c.q_cur());
  Rational b(c.p_cur() + c.p_prev(), c.q_cur() + c.q_prev());
  // The tail map t -> (p_k + t p_{k-1})/(q_k + t q_{k-1}) is increasing for
  // even k and decreasing for odd k, so the t=0 endpoint p_k/q_k is the left
  // end exactly when k is even.
  Cylinder cyl;
  cyl.word = w;
  if (w.size() % 2 == 0) {
    cyl.left = std::move(a);
    cyl.right = std::move(b);
  } else {
    cyl.left = std::move(b);
    cyl.right = std::move(a);
  }
  cyl.diameter = Rational(BigInt(1), c.q_cur() * (c.q_cur() + c.q_prev()));
  return cyl;
}

}  // namespace cfruns
