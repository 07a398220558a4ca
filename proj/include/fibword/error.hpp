#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibword {

enum class ErrorKind {
  InvalidArgument,
  ShapeMismatch,
  OutOfDomain,
  NotFibStructured,
  NotAFactor,
  InconsistentJoint,
  IncompleteInput,
  EmptyWord,
  TooShort,
  OutOfRange,
  BadBounds,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotFibStructured: return "NotFibStructured";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::InconsistentJoint: return "InconsistentJoint";
    case ErrorKind::IncompleteInput: return "IncompleteInput";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadBounds: return "BadBounds";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps onto exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fibword
