#include "eulerode/solver.hpp"

#include "eulerode/errors.hpp"

namespace eulerode {

GeneralizedSeries invert_F(const EulerPoly& F, const GeneralizedSeries& s) {
  GeneralizedSeries::Terms out;
  for (const auto& [k, c] : s.terms()) {
    const Rational f = F.eval(s.base() + Rational(k));
    if (f.is_zero()) throw ResonanceError(k);
    out.emplace(k, c / Coeff(f));
  }
  return GeneralizedSeries(s.base(), std::move(out), s.truncation_order(), s.direction());
}

SolveReport master_solve(const LinDiffOp& op, const Rational& lambda, int max_order) {
  if (max_order < 1) throw Error(ErrorKind::InvalidArgument, "max_order must be at least 1");
  DegreeSplit split = degree_split(op);
  if (split.euler.is_zero()) throw Error(ErrorKind::ZeroEulerPart, "operator has no degree-zero part");
  if (!split.euler.eval(lambda).is_zero())
    throw Error(ErrorKind::IndicialMismatch,
                "F(" + lambda.str() + ") = " + split.euler.eval(lambda).str() + " is not zero");

  SolveReport report;
  report.euler = split.euler;
  report.remainder = split.remainder;

  const LinDiffOp& P = split.remainder;
  Direction direction = Direction::Ascending;
  if (!P.is_zero()) {
    if (*P.min_degree() < 0 && *P.max_degree() > 0)
      throw Error(ErrorKind::MixedDegreeRemainder,
                  "P = " + P.str() + " both raises and lowers degree");
    direction = *P.max_degree() < 0 ? Direction::Descending : Direction::Ascending;
  }

  const auto in_range = [&](std::int64_t k) {
    return direction == Direction::Ascending ? k < max_order : k > -max_order;
  };

  GeneralizedSeries::Terms acc{{0, Coeff(1)}};
  GeneralizedSeries term = GeneralizedSeries::monomial(lambda);
  bool dropped = false;
  std::int64_t reach = 0;
  while (true) {
    GeneralizedSeries image = apply(P, term);
    GeneralizedSeries::Terms kept;
    for (const auto& [k, c] : image.terms()) {
      if (in_range(k)) kept.emplace(k, c);
      else dropped = true;
    }
    if (kept.empty()) break;
    term = invert_F(split.euler, GeneralizedSeries(lambda, std::move(kept))).scaled(Coeff(-1));
    ++report.iterations_used;
    for (const auto& [k, c] : term.terms()) {
      auto [it, inserted] = acc.emplace(k, c);
      if (!inserted) it->second += c;
      reach = direction == Direction::Ascending ? std::max(reach, k) : std::min(reach, k);
    }
  }

  report.status = dropped ? SolveStatus::Truncated : SolveStatus::Terminated;
  std::optional<std::int64_t> order;
  if (dropped) order = max_order;
  report.solution = GeneralizedSeries(lambda, std::move(acc), order, direction);

  const std::int64_t step = direction == Direction::Ascending ? 1 : -1;
  for (std::int64_t k = step; k != reach + step; k += step)
    if (split.euler.eval(lambda + Rational(k)).is_zero()) report.resonances_hit.push_back(k);
  return report;
}

GeneralizedSeries residual(const LinDiffOp& op, const GeneralizedSeries& s) {
  // apply() already narrows the window of a truncated input by the
  // operator's extreme degree and drops whatever falls outside it.
  return apply(op, s);
}

}  // namespace eulerode
