#pragma once

#include <stdexcept>
#include <string>

namespace crankparity {

enum class ErrorKind {
  invalid_input,
  invalid_truncation,
  truncation,
  non_unit_divisor,
  fractional_exponent,
  undefined_statistic,
  not_distinct,
  invalid_pair,
  not_g_polynomial,
  validation,
  precision,
  domain,
  bootstrap_needed,
  budget_exceeded,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_truncation: return "invalid-truncation";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::non_unit_divisor: return "non-unit-divisor";
    case ErrorKind::fractional_exponent: return "fractional-exponent";
    case ErrorKind::undefined_statistic: return "undefined-statistic";
    case ErrorKind::not_distinct: return "not-distinct";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::not_g_polynomial: return "not-a-G-polynomial";
    case ErrorKind::validation: return "validation";
    case ErrorKind::precision: return "precision";
    case ErrorKind::domain: return "domain";
    case ErrorKind::bootstrap_needed: return "bootstrap-needed";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised whenever a coefficient at or beyond a series' truncation is
/// requested. `required()` is the smallest truncation that would have
/// satisfied the request.
class TruncationError : public Error {
 public:
  TruncationError(long required, const std::string& what)
      : Error(ErrorKind::truncation,
              what + " (requires truncation >= " + std::to_string(required) + ")"),
        required_(required) {}

  long required() const noexcept { return required_; }

 private:
  long required_;
};

}  // namespace crankparity
