#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfruns {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The input collapsed onto a rational before the requested number of
/// digits: its continued fraction expansion is finite. Carries the digits
/// obtained so far.
class RationalTerminated : public Error {
 public:
  RationalTerminated(std::vector<std::int64_t> digits, std::size_t requested)
      : Error("expansion terminated after " + std::to_string(digits.size()) +
              " of " + std::to_string(requested) + " digits: input is rational"),
        digits_(std::move(digits)) {}
  const std::vector<std::int64_t>& digits() const noexcept { return digits_; }

 private:
  std::vector<std::int64_t> digits_;
};

/// The refinement contract could not separate the next floor(1/t) decision
/// within the configured number of refinement rounds.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(std::vector<std::int64_t> digits, int rounds)
      : Error("digit undecided after " + std::to_string(rounds) +
              " refinement rounds (" + std::to_string(digits.size()) +
              " digits certified)"),
        digits_(std::move(digits)),
        rounds_(rounds) {}
  const std::vector<std::int64_t>& digits() const noexcept { return digits_; }
  int rounds() const noexcept { return rounds_; }

 private:
  std::vector<std::int64_t> digits_;
  int rounds_;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("operation requires a nonempty word") {}
};

class InvalidInterval : public Error {
 public:
  explicit InvalidInterval(const std::string& msg) : Error(msg) {}
};

class StreamEnded : public Error {
 public:
  StreamEnded(std::uint64_t have, std::uint64_t want)
      : Error("stream ended at " + std::to_string(have) +
              " symbols, checkpoint at " + std::to_string(want)) {}
};

class AssumptionUnsatisfiable : public Error {
 public:
  explicit AssumptionUnsatisfiable(const std::string& msg) : Error(msg) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

class ScheduleTooLarge : public Error {
 public:
  explicit ScheduleTooLarge(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace cfruns
