#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfruns {

/// A symbol of the countable alphabet (a partial quotient value): a
/// positive integer.
using Digit = std::int64_t;

/// A finite word of positive-integer digits (d_1, ..., d_k).
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Digit> digits) : digits_(std::move(digits)) {
    for (Digit d : digits_) check(d);
  }

  Word(std::initializer_list<Digit> digits) : Word(std::vector<Digit>(digits)) {}

  void push_back(Digit d) {
    check(d);
    digits_.push_back(d);
  }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }

  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  bool operator==(const Word&) const = default;

  /// The word (d, d, ..., d) of the given length.
  static Word constant(Digit d, std::size_t length) {
    return Word(std::vector<Digit>(length, d));
  }

 private:
  static void check(Digit d) {
    if (d < 1) throw std::invalid_argument("word digit must be >= 1, got " + std::to_string(d));
  }

  std::vector<Digit> digits_;
};

}  // namespace cfruns
