#pragma once

#include <stdexcept>
#include <string>

namespace splitring {

enum class ErrorKind {
  NotAUnit,
  RingMismatch,
  NonMonic,
  InfiniteRing,
  IndexOutOfRange,
  InexactDivision,
  NonCentralCoefficients,
  CapExceeded,
  PreconditionViolated,
  LengthMismatch,
  InvalidRing,
  Parse,
  Unsupported,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splitring
