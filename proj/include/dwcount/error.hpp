#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dwcount {

enum class ErrorKind {
  NegativeGenus,
  NonpositiveMultiplicity,
  InvalidGroupOrder,
  InvalidModulus,
  ModulusMismatch,
  NotAnInteger,
  IntegralityViolation,
  NegativeCount,
  WorkLimitExceeded,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::NonpositiveMultiplicity: return "NonpositiveMultiplicity";
    case ErrorKind::InvalidGroupOrder: return "InvalidGroupOrder";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotAnInteger: return "NotAnInteger";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(ErrorKind::ParseError,
              "at byte " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Raised when the estimated amount of work exceeds the configured cap.
class WorkLimitError : public Error {
 public:
  WorkLimitError(double estimate, double cap, const std::string& what)
      : Error(ErrorKind::WorkLimitExceeded,
              what + " (estimated work " + format_count(estimate) + " exceeds limit " +
                  format_count(cap) + ")"),
        estimate_(estimate),
        cap_(cap) {}

  double estimate() const noexcept { return estimate_; }
  double cap() const noexcept { return cap_; }

 private:
  static std::string format_count(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
  }

  double estimate_;
  double cap_;
};

}  // namespace dwcount
