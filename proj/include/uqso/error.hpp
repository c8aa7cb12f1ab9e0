#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uqso {

/// Error classes raised by the library. Each maps to a distinct CLI exit code.
enum class ErrorKind {
  InvalidArgument,
  ZeroBase,
  DegenerateDenominator,
  RankMismatch,
  VariantMismatch,
  IndexOutOfRange,
  TopRowShift,
  DegenerateParameter,
  DimensionMismatch,
  DegenerateQ,
  SingularDenominator,
  SyntaxError,
  IndexError,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(ErrorKind::SyntaxError,
              message + " at line " + std::to_string(line) + ", column " +
                  std::to_string(column)),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

} // namespace uqso
