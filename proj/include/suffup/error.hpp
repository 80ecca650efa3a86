#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suffup {

enum class DataErrorKind {
  MalformedRow,
  NonPositiveTime,
  UnknownStatus,
  EmptySample,
  MissingEventTime,
};

const char* to_string(DataErrorKind kind);

/// Raised for input that cannot form a valid survival sample, or a sample
/// that lacks what an operation needs (e.g. no uncensored observation).
class DataError : public std::runtime_error {
 public:
  DataError(DataErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  DataErrorKind kind() const noexcept { return kind_; }
  /// 1-based line in the source file, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  DataErrorKind kind_;
  std::size_t line_;
};

/// 2b - a - c vanished where the Gumbel coefficients need to divide by it.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed distribution string or preset name.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace suffup
