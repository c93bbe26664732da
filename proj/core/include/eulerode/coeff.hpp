#ifndef EULERODE_COEFF_HPP
#define EULERODE_COEFF_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "eulerode/param_poly.hpp"
#include "eulerode/rational.hpp"

namespace eulerode {

// Exact scalar: a Rational, a polynomial in one parameter, or a reduced
// rational function in one parameter. Values are always stored in the
// simplest of the three shapes that represents them, so structural equality
// is mathematical equality.
class Coeff {
 public:
  enum class Kind { Rational, Poly, RatFunc };

  Coeff() : v_(Rational(0)) {}
  template <std::integral I>
  Coeff(I n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Coeff(ParamPoly p);  // NOLINT(google-explicit-constructor)
  Coeff(ParamRatFunc f);  // NOLINT(google-explicit-constructor)

  static Coeff parameter(const std::string& name) { return Coeff(ParamPoly::variable(name)); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_rational() const { return kind() == Kind::Rational; }
  bool is_zero() const;
  bool is_one() const;

  // Throws InvalidArgument unless is_rational().
  const Rational& as_rational() const;
  ParamPoly as_poly() const;
  ParamRatFunc as_ratfunc() const;

  // Name of the free parameter, if the value depends on one.
  std::optional<std::string> parameter_name() const;

  // Exact substitution of the parameter; PoleAtValue at a denominator root.
  Rational eval(const Rational& value) const;

  std::string str() const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  friend bool operator==(const Coeff& a, const Coeff& b) = default;

 private:
  std::variant<Rational, ParamPoly, ParamRatFunc> v_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

enum class ArithOp { Add, Sub, Mul, Div };

// Binary arithmetic with the normalization rules above.
Coeff field_arith(const Coeff& a, const Coeff& b, ArithOp op);

// Exact substitution of the parameter.
Rational eval_param(const Coeff& c, const Rational& value);

// Name shared by a and b (if any); ParameterMismatch when they disagree.
std::optional<std::string> common_parameter(const Coeff& a, const Coeff& b);

}  // namespace eulerode

#endif  // EULERODE_COEFF_HPP
