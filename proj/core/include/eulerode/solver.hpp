#ifndef EULERODE_SOLVER_HPP
#define EULERODE_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "eulerode/operator.hpp"
#include "eulerode/series.hpp"

namespace eulerode {

inline constexpr int kDefaultMaxOrder = 64;

enum class SolveStatus { Terminated, Truncated };

struct SolveReport {
  GeneralizedSeries solution;
  SolveStatus status = SolveStatus::Truncated;
  // Number of nonzero iterates t_1, t_2, ... that were produced.
  int iterations_used = 0;
  // Offsets k != 0 inside the explored range with F(lambda + k) = 0 whose
  // source coefficient happened to vanish, so the division was never needed.
  std::vector<std::int64_t> resonances_hit;
  EulerPoly euler;
  LinDiffOp remainder;
};

// Divides the coefficient at offset k by F(lambda + k). Throws
// ResonanceError when F(lambda + k) = 0 at a nonzero coefficient.
GeneralizedSeries invert_F(const EulerPoly& F, const GeneralizedSeries& s);

// y = sum_m (-1)^m [F(D)^-1 P]^m x^lambda for op = F(D) + P, normalized so
// the x^lambda coefficient is 1.
// 
// P must have definite sign of degree (all terms raising, or all lowering)
// so the iterates move monotonically away from x^lambda; the series is then
// ascending or descending accordingly. Iteration stops when an iterate
// vanishes (Terminated) or when every surviving term lies beyond max_order
// offsets from the anchor (Truncated). Every stored coefficient is exact.
// 
// Throws IndicialMismatch if F(lambda) != 0, MixedDegreeRemainder if P both
// raises and lowers degree, and ResonanceError from invert_F.
SolveReport master_solve(const LinDiffOp& op, const Rational& lambda,
                         int max_order = kDefaultMaxOrder);

// apply(op, s) restricted to the offsets that the truncation of s cannot
// reach. For an exact s this is the full image.
GeneralizedSeries residual(const LinDiffOp& op, const GeneralizedSeries& s);

}  // namespace eulerode

#endif  // EULERODE_SOLVER_HPP
