#include "pfaffkit/error.hpp"

#include <sstream>

namespace pfaffkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DenominatorVanishesIdentically: return "DenominatorVanishesIdentically";
    case ErrorCode::TriangularityViolated: return "TriangularityViolated";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::NotPolynomialKind: return "NotPolynomialKind";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonConstantBase: return "NonConstantBase";
    case ErrorCode::InvalidD: return "InvalidD";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::ZeroDenominatorData: return "ZeroDenominatorData";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

namespace {
std::string describe_parse(int line, int column, const std::vector<std::string>& expected,
                           const std::string& detail) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << detail;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << ")";
  }
  return os.str();
}
}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(ErrorCode::ParseError, describe_parse(line, column, expected, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

TriangularityError::TriangularityError(std::size_t rule, std::size_t variable)
    : Error(ErrorCode::TriangularityViolated,
            "rule " + std::to_string(rule) + " mentions variable " + std::to_string(variable)),
      rule_(rule),
      variable_(variable) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace pfaffkit
