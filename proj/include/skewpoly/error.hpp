#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewpoly {

enum class ErrorCode {
  RingMismatch,
  DivisionByZero,
  NotFinite,
  InvalidFrame,
  ZeroPolynomial,
  NoSolution,
  DuplicatePoint,
  NotSeparable,
  NotPIndependent,
  InvalidInput,
  NotARing,
  MalformedInput,
};

std::string_view error_name(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code identifies the failure class and is what the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace skewpoly
