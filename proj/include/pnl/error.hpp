#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnl {

enum class Errc {
  NonPrime,
  ReducibleModulus,
  NoBuiltinModulus,
  DegreeNotDividing,
  ConventionMismatch,
  EvenPrime,
  PrimeMismatch,
  CapExceeded,
  SyntaxError,
  VariableOutOfRange,
  NotAPermutation,
  DimensionMismatch,
  IndexOutOfRange,
  NotBijective,
  NotSurjective,
  NotBalanced,
  NotOPolynomial,
  BadLambda,
  BadParameters,
  BadGcd,
  NotBent,
  ShapeMismatch,
  RangeError,
  ZeroComponent,
  NotSingleOutput,
  HypothesisFailed,
  InconsistentTotals,
  NotPerfectNonlinear,
  ShapeViolation,
  ConstraintViolation,
  OddPrime,
  OddN,
  WrongShape,
  UnknownSuite,
  FormatError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure in the library is reported through this type; `code()`
/// identifies the condition, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures additionally carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& detail)
      : Error(code, detail + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pnl
