#ifndef EULERODE_CLASSICAL_HPP
#define EULERODE_CLASSICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerode/exp_form.hpp"
#include "eulerode/operator.hpp"
#include "eulerode/series.hpp"

namespace eulerode {

enum class Family {
  Hermite,
  Laguerre,
  Legendre,
  Gegenbauer,
  ChebyshevT,
  ChebyshevU,
  Bessel,
  Kummer,
  Gauss,
};

// Which solution of a hypergeometric-type equation to build. The polynomial
// families and Bessel only have the ascending/polynomial one; Kummer and
// Gauss have the descending solution anchored at x^(-alpha) or x^(-beta)
// and, after premultiplying by x, the ascending one anchored at 1.
enum class Branch { Default, Ascending, Descending };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);
const std::vector<Family>& all_families();

// Required parameter names per family: alpha (Laguerre, Kummer, Gauss),
// beta (Gauss), gamma (Kummer, Gauss), lambda (Gegenbauer), nu (Bessel).
std::vector<std::string> required_parameters(Family f);

struct FamilySpec {
  Family family = Family::Hermite;
  std::map<std::string, Rational> params;
  // Polynomial degree; ignored by Bessel, Kummer and Gauss.
  int n = 0;
  Branch branch = Branch::Default;

  // MissingParameter / InvalidArgument on an incomplete or bad spec.
  void validate() const;
  const Rational& param(const std::string& name) const;
  bool is_polynomial_family() const;
};

// The operator of the family's row, parameters substituted, in the sign
// convention of the table (e.g. Hermite: x d - n - 1/2 d^2).
LinDiffOp build_equation(const FamilySpec& spec);

// The operator master_solve should run on for the requested branch: the row
// operator itself, or x times it for the ascending Kummer/Gauss branches.
LinDiffOp solving_equation(const FamilySpec& spec);

// Exponent the branch's solution is anchored at.
Rational anchor_exponent(const FamilySpec& spec);

// The branch's exponential closed form exp(T) x^anchor (scale constant 1).
ExpForm exp_form(const FamilySpec& spec);

// exp_apply of exp_form(spec).
GeneralizedSeries closed_form(const FamilySpec& spec, int order_cap = kDefaultMaxOrder);

// Independent ground truth: three-term recurrences for the polynomial
// families and term-ratio power series for Bessel, Kummer and Gauss, in the
// standard normalization (H_n, L_n^alpha, P_n, C_n^lambda, T_n, U_n; series
// start with coefficient 1 at the anchor, Bessel without its 1/(2^nu Gamma)
// prefactor). Series are truncated at order_cap offsets.
GeneralizedSeries oracle(const FamilySpec& spec, int order_cap = kDefaultMaxOrder);

// Leading coefficient of the standard normalization: 2^n for Hermite,
// (-1)^n/n! for Laguerre and so on; 1 for the series families.
Rational standard_leading_coefficient(const FamilySpec& spec);

// The unique c with c * computed = reference. NotProportionalError carries
// the first offset where that fails.
Coeff match_constant(const GeneralizedSeries& computed, const GeneralizedSeries& reference);

// Bessel closed form with the anchor sign flipped against the resolvent shift:
// exp[-1/(2(D + s nu)) x^2] x^(-s nu) for s = +1 or -1. Not a solution.
ExpForm bessel_table_pairing(const Rational& nu, int sign);

}  // namespace eulerode

#endif  // EULERODE_CLASSICAL_HPP
