#include "eulerode/errors.hpp"

#include <sstream>

namespace eulerode {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::PoleAtValue: return "PoleAtValue";
    case ErrorKind::IncompatibleBase: return "IncompatibleBase";
    case ErrorKind::ZeroEulerPart: return "ZeroEulerPart";
    case ErrorKind::ParametricEulerPart: return "ParametricEulerPart";
    case ErrorKind::Resonance: return "Resonance";
    case ErrorKind::IndicialMismatch: return "IndicialMismatch";
    case ErrorKind::MixedDegreeRemainder: return "MixedDegreeRemainder";
    case ErrorKind::ResolventPole: return "ResolventPole";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::NotProportional: return "NotProportional";
    case ErrorKind::NonRationalRoot: return "NonRationalRoot";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::TooManyParts: return "TooManyParts";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DegenerateEigenvalue: return "DegenerateEigenvalue";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::TwoFreeParameters: return "TwoFreeParameters";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ResonanceError::ResonanceError(std::int64_t offset)
    : Error(ErrorKind::Resonance,
            "resonance: F(lambda + k) = 0 with nonzero source at offset k = " +
                std::to_string(offset)),
      offset_(offset) {}

NotProportionalError::NotProportionalError(std::int64_t offset)
    : Error(ErrorKind::NotProportional,
            "series are not proportional; first mismatch at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

std::string parse_message(std::size_t offset, const std::vector<std::string>& expected,
                          const std::string& detail) {
  std::ostringstream os;
  os << "parse error at byte " << offset;
  if (!detail.empty()) os << ": " << detail;
  if (!expected.empty()) {
    os << " (expected one of:";
    for (const auto& e : expected) os << ' ' << e;
    os << ')';
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(ErrorKind::ParseError, parse_message(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace eulerode
