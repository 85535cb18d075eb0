#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pfaffkit {

enum class ErrorCode {
  NotMonic,
  ReduciblePolynomial,
  DivisionByZero,
  FieldMismatch,
  DivisionByZeroPolynomial,
  UnknownVariable,
  RingMismatch,
  DenominatorVanishesIdentically,
  TriangularityViolated,
  MixedKinds,
  ChainMismatch,
  NotPolynomialKind,
  ZeroElement,
  ZeroDenominator,
  ArityMismatch,
  NonConstantBase,
  InvalidD,
  InvalidN,
  UnknownAction,
  ZeroDenominatorData,
  DegenerateCurve,
  ParseError,
  InvalidInput,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every recoverable failure raised by the library.
/// `code()` is the machine-readable kind; `what()` carries detail for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& detail);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

class TriangularityError : public Error {
 public:
  TriangularityError(std::size_t rule, std::size_t variable);

  /// 1-based index of the offending rule and of the variable it must not mention.
  std::size_t rule() const noexcept { return rule_; }
  std::size_t variable() const noexcept { return variable_; }

 private:
  std::size_t rule_;
  std::size_t variable_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace pfaffkit
