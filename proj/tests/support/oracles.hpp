#ifndef EULERODE_TEST_ORACLES_HPP
#define EULERODE_TEST_ORACLES_HPP

#include <map>
#include <random>
#include <vector>

#include "eulerode/manybody.hpp"
#include "eulerode/operator.hpp"
#include "eulerode/series.hpp"

namespace eulerode::ref {

// Physicists' H_n from the explicit sum n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!).
GeneralizedSeries hermite_explicit(int n);

// Taylor coefficient of exp(-x^2/2) at x^k.
Rational gauss_taylor(int k);

// Image of s under op computed by differentiating one power at a time
// (no falling factorials), keyed by exponent. Coefficients are exact.
std::map<Rational, Coeff> naive_image(const LinDiffOp& op, const GeneralizedSeries& s);

// True when naive_image vanishes on every exponent the truncation of s
// cannot disturb; an exact s must have a zero image everywhere.
bool naive_residual_zero(const LinDiffOp& op, const GeneralizedSeries& s);

struct MasterCase {
  LinDiffOp op;
  Rational lambda;
  bool ascending = true;
};

// F(D) = (D - lambda) G(D) with G's roots placed so no offset in the
// direction of travel resonates, plus a remainder whose terms all raise (or
// all lower) the degree. Some cases carry a symbolic parameter E.
MasterCase random_master_case(std::mt19937& rng);

// Taylor coefficients in the parameter of a rational function whose
// denominator does not vanish at 0.
std::vector<Rational> parameter_taylor(const Coeff& c, int terms);

// sum_i D_i^2 p + beta sum_{i<j} (z_i + z_j)/(z_i - z_j) (D_i - D_j) p at a
// point, with the fraction evaluated directly.
Rational sutherland_at(const Rational& beta, const MPoly& p, const std::vector<Rational>& z);

// A(beta) p at a point, with 1/(x_i - x_j) evaluated directly.
Rational csm_A_at(const Rational& beta, const MPoly& p, const std::vector<Rational>& x);

Rational eval_at(const MPoly& p, const std::vector<Rational>& z);

}  // namespace eulerode::ref

#endif  // EULERODE_TEST_ORACLES_HPP
