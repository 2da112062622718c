#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lclt {

enum class ErrorCode {
  UnknownVariable,
  SyntaxError,
  NonRational,
  ZeroDenominatorAtOrigin,
  DivisionByZero,
  InvalidGeneratingFunction,
  PVanishesAtLeftEndpoint,
  NoPositiveRoot,
  Singular,
  Indeterminate,
  HtVanishes,
  GVanishes,
  DegenerateHessian,
  RjVanishes,
  BudgetExceeded,
  UnboundedSupport,
  EmptySlice,
  InvalidArgument,
  Io,
};

/// Machine-readable name used in JSON output and CLI messages.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lclt
