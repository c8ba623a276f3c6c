#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leafnet {

enum class ErrorCode {
  MalformedGraph6,
  IndexOutOfRange,
  NotASeparator,
  TooSmall,
  TooLarge,
  Disconnected,
  NotTwoConnected,
  LabelSpaceMismatch,
  NotLeafGuaranteed,
  NotTwoLeafStable,
  PreconditionViolated,
  MTooSmall,
  KTooSmall,
  MissingRoles,
  NotAFragment,
  UnknownFamily,
  TimedOut,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotASeparator: return "NotASeparator";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::LabelSpaceMismatch: return "LabelSpaceMismatch";
    case ErrorCode::NotLeafGuaranteed: return "NotLeafGuaranteed";
    case ErrorCode::NotTwoLeafStable: return "NotTwoLeafStable";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::MissingRoles: return "MissingRoles";
    case ErrorCode::NotAFragment: return "NotAFragment";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::TimedOut: return "TimedOut";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI turns them into per-line error records.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leafnet
