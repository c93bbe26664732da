#ifndef EULERODE_EXP_FORM_HPP
#define EULERODE_EXP_FORM_HPP

#include <string>
#include <variant>
#include <vector>

#include "eulerode/operator.hpp"
#include "eulerode/series.hpp"
#include "eulerode/solver.hpp"

namespace eulerode {

// 1/(D + shift): acts on x^mu as division by mu + shift. Degree zero.
struct Resolvent {
  Rational shift;
};

using ExpStage = std::variant<LinDiffOp, Resolvent>;

// exp(T) applied to an anchor, with T = scale * stage_n o ... o stage_1.
// 
// Stages are listed in the order they act (stages.front() acts first).
// Every operator stage has a definite degree, and the total degree of T is
// nonzero so each power of T moves strictly away from the anchor.
struct ExpForm {
  std::vector<ExpStage> stages;
  Coeff scale = Coeff(1);
  GeneralizedSeries anchor;

  // Sum of stage degrees; InvalidForm if some stage has no definite degree.
  int degree() const;
  std::string str() const;
};

// Applies T once, stage by stage. ResolventPole if mu + shift = 0 at a
// nonzero coefficient.
GeneralizedSeries apply_generator(const ExpForm& form, const GeneralizedSeries& s);

// sum_m T^m / m! applied to the anchor, by repeated application of T to the
// current term (powers of T are never expanded). Terms beyond order_cap
// offsets from the anchor base are discarded and the result is then marked
// truncated; with a polynomial anchor and negative degree the sum is finite
// and exact.
GeneralizedSeries exp_apply(const ExpForm& form, int order_cap = kDefaultMaxOrder);

}  // namespace eulerode

#endif  // EULERODE_EXP_FORM_HPP
