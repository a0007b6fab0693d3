#ifndef DEGCHROM_ERRORS_HPP
#define DEGCHROM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "degchrom/bignum.hpp"

namespace degchrom {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed graph input; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

class NotATreeError : public Error {
  public:
    enum class Reason { Disconnected, CycleFound };
    NotATreeError(Reason reason, const std::string& message) : Error(message), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

  private:
    Reason reason_;
};

// Enumeration would exceed the configured state-space budget.
class BudgetExceededError : public Error {
  public:
    using Error::Error;
};

// The theorem's hypotheses (1 < m < n) do not hold.
class HypothesisViolationError : public Error {
  public:
    using Error::Error;
};

// A polynomial expected to have integer coefficients did not; carries the
// offending power and value.
class NonIntegralCoefficientError : public Error {
  public:
    NonIntegralCoefficientError(int power, BigRat value)
        : Error("non-integral coefficient " + value.get_str() + " at power " +
                std::to_string(power)),
          power_(power),
          value_(std::move(value)) {}
    int power() const noexcept { return power_; }
    const BigRat& value() const noexcept { return value_; }

  private:
    int power_;
    BigRat value_;
};

}  // namespace degchrom

#endif
