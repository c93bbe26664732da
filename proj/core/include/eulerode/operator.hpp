#ifndef EULERODE_OPERATOR_HPP
#define EULERODE_OPERATOR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerode/coeff.hpp"
#include "eulerode/param_poly.hpp"
#include "eulerode/series.hpp"

namespace eulerode {

// c * x^a * (d/dx)^b. Its degree a - b is the shift it applies to monomials.
struct MonoOp {
  Coeff coeff;
  int xpow = 0;
  int dorder = 0;

  int degree() const { return xpow - dorder; }
};

// Linear differential operator with polynomial coefficients, kept in normal
// order (all powers of x to the left of all derivatives), one term per
// (xpow, dorder) pair and no zero terms.
class LinDiffOp {
 public:
  using Key = std::pair<int, int>;

  LinDiffOp() = default;
  explicit LinDiffOp(const std::vector<MonoOp>& terms);

  static LinDiffOp scalar(const Coeff& c);
  static LinDiffOp identity() { return scalar(Coeff(1)); }
  static LinDiffOp mono(const Coeff& c, int xpow, int dorder);
  static LinDiffOp x(int power = 1) { return mono(Coeff(1), power, 0); }
  static LinDiffOp d(int order = 1) { return mono(Coeff(1), 0, order); }
  // The Euler operator x d/dx.
  static LinDiffOp euler() { return mono(Coeff(1), 1, 1); }

  const std::map<Key, Coeff>& terms() const { return terms_; }
  std::vector<MonoOp> monomials() const;
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int xpow, int dorder) const;

  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
  // The common degree when every term has the same one.
  std::optional<int> definite_degree() const;
  std::optional<std::string> parameter_name() const;

  // e.g. "x^2*d^2 + 2*E*x^2 - x^4".
  std::string str() const;

  LinDiffOp operator-() const;
  friend LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b);
  friend LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b);
  // Composition a o b (b acts first), normal-ordered with d x = x d + 1.
  friend LinDiffOp operator*(const LinDiffOp& a, const LinDiffOp& b);
  friend LinDiffOp operator*(const Coeff& s, const LinDiffOp& a);
  friend bool operator==(const LinDiffOp& a, const LinDiffOp& b) = default;

 private:
  void add_term(int xpow, int dorder, const Coeff& c);

  std::map<Key, Coeff> terms_;
};

// F(D) as a polynomial in the Euler operator D = x d/dx, rational
// coefficients only.
class EulerPoly {
 public:
  EulerPoly() = default;
  explicit EulerPoly(std::vector<Rational> coeffs) : p_("D", std::move(coeffs)) {}
  explicit EulerPoly(const ParamPoly& p) : p_(p.with_name("D")) {}

  // (D - r_1)(D - r_2)...
  static EulerPoly from_roots(const std::vector<Rational>& roots);

  const ParamPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  Rational eval(const Rational& lambda) const { return p_.eval(lambda); }

  // Re-expands D^n = sum_k S(n, k) x^k d^k back into an operator.
  LinDiffOp to_operator() const;

  std::string str() const;

  friend EulerPoly operator*(const EulerPoly& a, const EulerPoly& b) { return EulerPoly(a.p_ * b.p_); }
  friend bool operator==(const EulerPoly& a, const EulerPoly& b) = default;

 private:
  ParamPoly p_;
};

struct DegreeSplit {
  EulerPoly euler;       // F(D), the degree-zero part
  LinDiffOp remainder;   // P, no degree-zero terms
};

struct IndicialRoots {
  std::vector<Rational> roots;     // distinct rational roots, ascending
  std::vector<int> multiplicities;
  int degree = 0;                  // deg F
  int unrepresentable = 0;         // roots (with multiplicity) outside Q
};

// Exact image of s under op. c x^a d^b maps x^mu to c mu(mu-1)...(mu-b+1)
// x^(mu-b+a). A truncated input shifts its window by the operator's
// extreme degree and anything outside the new window is dropped.
GeneralizedSeries apply(const LinDiffOp& op, const GeneralizedSeries& s);

// op = F(D) + P with every x^k d^k term rewritten as D(D-1)...(D-k+1).
// ParametricEulerPart if a degree-zero term carries the free parameter.
DegreeSplit degree_split(const LinDiffOp& op);

// ZeroEulerPart if F is identically zero.
IndicialRoots indicial_roots(const EulerPoly& F);

// x^k o op.
LinDiffOp premultiply(const LinDiffOp& op, int k);

// (d/dx)^times o op.
LinDiffOp differentiate_eq(const LinDiffOp& op, int times);

// AB - BA.
LinDiffOp commutator(const LinDiffOp& a, const LinDiffOp& b);

}  // namespace eulerode

#endif  // EULERODE_OPERATOR_HPP
