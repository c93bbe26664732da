#ifndef EULERODE_SPECTRAL_HPP
#define EULERODE_SPECTRAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "eulerode/errors.hpp"
#include "eulerode/operator.hpp"
#include "eulerode/param_poly.hpp"
#include "eulerode/series.hpp"
#include "eulerode/solver.hpp"

namespace eulerode {

// Name of the symbolic energy parameter used throughout this module.
inline const std::string kEnergy = "E";

// --- Harmonic oscillator ----------------------------------------------------

// x^2 d^2 + 2E x^2 - x^4: the oscillator -y'' + x^2 y = 2E y multiplied by x^2.
LinDiffOp oscillator_operator(const Coeff& energy = Coeff::parameter(kEnergy));

// Gauge-reduced Hermite-type operator D - alpha - 1/2 d^2.
LinDiffOp gauge_reduced_oscillator(const Rational& alpha);

// Ascending series of the oscillator with symbolic E, anchored at x^sector
// (0 even, 1 odd), through offset K (exclusive).
GeneralizedSeries oscillator_series(int K, int sector = 0);

// E_n = n + 1/2, certified by termination of D - n - 1/2 d^2 at x^n.
// ResidualNonzero if that certificate fails.
Rational oscillator_quantize(int n);

// --- Quasi-exactly solvable sextic -----------------------------------------

struct QesEigenpair {
  Rational energy;
  GeneralizedSeries polynomial;  // the gauge-reduced factor, exact
};

struct QesResult {
  int n = 0;
  Rational g;                     // sqrt(gamma)
  Rational gamma;                 // g^2
  Rational alpha;                 // -(2n + 3) g
  Rational b;                     // gauge exp(-b x^4) with b = g/4
  int sector = 0;                 // anchor exponent, n mod 2
  ParamPoly termination_poly;     // coefficient of x^(n+2) as a polynomial in E
  std::vector<Rational> spectrum; // ascending
  std::vector<QesEigenpair> eigenfunctions;
  GeneralizedSeries series;       // symbolic-E series the spectrum was read off

  std::string gauge() const;
};

// Thrown when the termination polynomial has roots outside Q. Carries the
// polynomial so callers can hand it to a numeric root finder.
class NonRationalRootError : public Error {
 public:
  NonRationalRootError(ParamPoly poly, std::vector<Rational> rational_part);
  const ParamPoly& poly() const noexcept { return poly_; }
  const std::vector<Rational>& rational_roots() const noexcept { return rational_; }

 private:
  ParamPoly poly_;
  std::vector<Rational> rational_;
};

// Gauge-reduced sextic operator times x^2:
// D(D-1) + E x^2 + 2 n g x^4 - 2 g x^5 d.
LinDiffOp sextic_operator(int n, const Rational& g, const Coeff& energy = Coeff::parameter(kEnergy));

// Quasi-exact part of the spectrum of -y'' + alpha x^2 y + g^2 x^6 y = E y
// with alpha = -(2n+3) g. Requires K > n + 2.
QesResult sextic_qes(int n, const Rational& g, int K = kDefaultMaxOrder);

// --- Anharmonic approximation ---------------------------------------------

enum class RootMethod { ClosedForm, Bisection };

struct AnharmonicResult {
  Rational alpha;
  Rational beta;
  GeneralizedSeries series;        // symbolic-E ground-state series
  ParamPoly cubic;                 // monic: E^3 - alpha E - 3/2 beta
  ParamPoly mu_of_E;               // matched mu as a polynomial in E
  ParamPoly nu_of_E;               // matched nu as a polynomial in E
  double E0 = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  RootMethod method = RootMethod::ClosedForm;
  // Discriminant 1640.25 beta^2 - 108 alpha^3 was negative, so the closed
  // form went through complex intermediates.
  bool complex_intermediate = false;
  double closed_form_root = 0.0;   // real part of the closed form
  double closed_form_imag = 0.0;   // residual imaginary part (rounding only)
  double bisection_root = 0.0;
  // All real roots of the cubic, ascending (the selection is E0).
  std::vector<double> real_roots;
  bool root_selected = true;       // false when no selection rule applies
};

// D(D-1) + E x^2 - alpha x^4 - beta x^6: -y'' + alpha x^2 y + beta x^4 y = E y
// times x^2.
LinDiffOp anharmonic_operator(const Rational& alpha, const Rational& beta,
                              const Coeff& energy = Coeff::parameter(kEnergy));

// Three-term matching of the ground series against exp(-mu x^2 - nu x^4).
// beta must be nonnegative; for beta = 0 no root is selected.
AnharmonicResult anharmonic_approx(const Rational& alpha, const Rational& beta, int K = 16);

}  // namespace eulerode

#endif  // EULERODE_SPECTRAL_HPP
