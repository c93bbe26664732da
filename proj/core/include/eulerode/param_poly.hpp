#ifndef EULERODE_PARAM_POLY_HPP
#define EULERODE_PARAM_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "eulerode/rational.hpp"

namespace eulerode {

// Univariate polynomial with rational coefficients in one named parameter.
// 
// Coefficients are stored by ascending power and trimmed, so the highest
// stored coefficient is nonzero unless the polynomial is zero. A constant
// polynomial carries no parameter name; this lets constants mix freely with
// polynomials in any parameter.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(std::string name, std::vector<Rational> coeffs);

  static ParamPoly constant(const Rational& c);
  static ParamPoly variable(const std::string& name);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int power) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& value) const;
  double eval(double value) const;
  ParamPoly derivative() const;
  ParamPoly monic() const;
  ParamPoly scaled(const Rational& s) const;
  ParamPoly with_name(const std::string& name) const;

  // Ascending-power rendering, e.g. "1+2*E^2" or "-7/180*E-1/90*E^3".
  std::string str() const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

 private:
  void trim();

  std::string name_;
  std::vector<Rational> c_;
};

// Name shared by a and b; throws ParameterMismatch if both are
// nonconstant in different parameters.
std::string common_parameter(const ParamPoly& a, const ParamPoly& b);

// Euclidean division over Q: a = q b + r with deg r < deg b.
std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b);

// Monic gcd (zero only when both inputs are zero).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

// Reduced quotient num/den of two parameter polynomials. The denominator is
// monic and coprime to the numerator; zero is 0/1.
class ParamRatFunc {
 public:
  ParamRatFunc() : num_(), den_(ParamPoly::constant(1)) {}
  ParamRatFunc(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  std::string name() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  // Throws PoleAtValue when the denominator vanishes at value.
  Rational eval(const Rational& value) const;

  std::string str() const;

  ParamRatFunc operator-() const;
  friend ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b);
  friend bool operator==(const ParamRatFunc& a, const ParamRatFunc& b) = default;

 private:
  ParamPoly num_;
  ParamPoly den_;
};

struct RationalRoot {
  Rational value;
  int multiplicity = 1;
};

// Every rational root of p, ascending. Exact: real roots of the
// scaled monic integer transform are isolated with a Sturm sequence on
// half-integer endpoints and the single integer candidate per interval is
// tested directly. Throws ZeroEulerPart for p identically zero.
std::vector<RationalRoot> rational_roots(const ParamPoly& p);

// Number of distinct real roots (Sturm). ZeroEulerPart for p = 0.
int count_real_roots(const ParamPoly& p);

}  // namespace eulerode

#endif  // EULERODE_PARAM_POLY_HPP
