#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zlab {

enum class ErrorKind {
  DescriptorMismatch,
  DivisionByZero,
  ZeroPolynomial,
  DegreeTooLow,
  PointAtInfinity,
  NonReducedCurve,
  NonIsolated,
  NotAType,
  WrongType,
  IncompleteLocus,
  NotAllSimple,
  UnknownType,
  NoDecomposition,
  IdentityFails,
  WildPresent,
  ZeroPencilValue,
  ZeroPencilCoordinates,
  RankDrop,
  UnsupportedTriple,
  UnsupportedDegree,
  SyntaxError,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::SyntaxError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace zlab
