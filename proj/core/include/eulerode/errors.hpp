#ifndef EULERODE_ERRORS_HPP
#define EULERODE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerode {

enum class ErrorKind {
  DivisionByZero,
  ParameterMismatch,
  PoleAtValue,
  IncompatibleBase,
  ZeroEulerPart,
  ParametricEulerPart,
  Resonance,
  IndicialMismatch,
  MixedDegreeRemainder,
  ResolventPole,
  InvalidForm,
  MissingParameter,
  NotProportional,
  NonRationalRoot,
  ResidualNonzero,
  TooManyParts,
  NotDivisible,
  NotSymmetric,
  DegenerateEigenvalue,
  NotTriangular,
  ParseError,
  UnboundParameter,
  TwoFreeParameters,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Base of every exception thrown by the library. The kind is what callers
// (the CLI in particular) dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// F(lambda + k) vanished at an offset carrying a nonzero coefficient.
class ResonanceError : public Error {
 public:
  explicit ResonanceError(std::int64_t offset);
  std::int64_t offset() const noexcept { return offset_; }

 private:
  std::int64_t offset_;
};

class NotProportionalError : public Error {
 public:
  explicit NotProportionalError(std::int64_t offset);
  std::int64_t offset() const noexcept { return offset_; }

 private:
  std::int64_t offset_;
};

// Syntax error in the operator language; offset is a byte position.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& detail = {});
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace eulerode

#endif  // EULERODE_ERRORS_HPP
