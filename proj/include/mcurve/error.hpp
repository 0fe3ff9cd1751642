#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcurve {

/// Every failure the library can report. The CLI prints the name verbatim.
enum class ErrorKind {
  ZeroRank,
  Overflow,
  InvalidContext,
  InvalidArgument,
  InvalidSlice,
  InvalidPremise,
  GenusTooSmall,
  BudgetExceeded,
  WrongMultiplicity,
  InconsistentInput,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSlice: return "InvalidSlice";
    case ErrorKind::InvalidPremise: return "InvalidPremise";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WrongMultiplicity: return "WrongMultiplicity";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace mcurve
