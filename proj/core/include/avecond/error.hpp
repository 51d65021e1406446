#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace avecond {

enum class ErrorCode {
  SingularMatrix,
  DimensionTooLarge,
  DimensionMismatch,
  NoConvergence,
  NotRegular,
  NotSymmetric,
  NotApplicable,
  NoSolution,
  MultipleSolutions,
  ZeroRightHandSide,
  OneIsEigenvalue,
  NotPMatrix,
  IdentityMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based position into the offending text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace avecond
