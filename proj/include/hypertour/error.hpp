#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertour {

enum class ErrorKind {
  kBadTuple,
  kDuplicateSubset,
  kMissingSubset,
  kParseError,
  kRangeUnsupported,
  kNotStrong,
  kBadCycle,
  kBudgetExceeded,
  kConfigError,
  kInternalGuaranteeViolated,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBadTuple: return "BadTuple";
    case ErrorKind::kDuplicateSubset: return "DuplicateSubset";
    case ErrorKind::kMissingSubset: return "MissingSubset";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kRangeUnsupported: return "RangeUnsupported";
    case ErrorKind::kNotStrong: return "NotStrong";
    case ErrorKind::kBadCycle: return "BadCycle";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kConfigError: return "ConfigError";
    case ErrorKind::kInternalGuaranteeViolated: return "InternalGuaranteeViolated";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above; callers
// that care switch on kind() rather than parsing what().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hypertour
