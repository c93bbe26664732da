#include "eulerode/exp_form.hpp"

#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

namespace {

struct StageDegree {
  int operator()(const LinDiffOp& op) const {
    if (op.is_zero()) return 0;
    auto d = op.definite_degree();
    if (!d) throw Error(ErrorKind::InvalidForm, "stage " + op.str() + " has no definite degree");
    return *d;
  }
  int operator()(const Resolvent&) const { return 0; }
};

GeneralizedSeries apply_resolvent(const Resolvent& r, const GeneralizedSeries& s) {
  GeneralizedSeries::Terms out;
  for (const auto& [k, c] : s.terms()) {
    const Rational denom = s.base() + Rational(k) + r.shift;
    if (denom.is_zero())
      throw Error(ErrorKind::ResolventPole,
                  "1/(D + " + r.shift.str() + ") meets x^" + (s.base() + Rational(k)).str());
    out.emplace(k, c / Coeff(denom));
  }
  return GeneralizedSeries(s.base(), std::move(out), s.truncation_order(), s.direction());
}

}  // namespace

int ExpForm::degree() const {
  int total = 0;
  for (const auto& stage : stages) total += std::visit(StageDegree{}, stage);
  return total;
}

std::string ExpForm::str() const {
  std::ostringstream os;
  os << "exp[";
  if (!scale.is_one()) os << "(" << scale << ")";
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    if (const auto* op = std::get_if<LinDiffOp>(&*it)) os << "(" << op->str() << ")";
    else os << "1/(D + " << std::get<Resolvent>(*it).shift << ")";
  }
  os << "] " << anchor.str();
  return os.str();
}

GeneralizedSeries apply_generator(const ExpForm& form, const GeneralizedSeries& s) {
  GeneralizedSeries cur = s;
  for (const auto& stage : form.stages) {
    if (const auto* op = std::get_if<LinDiffOp>(&stage)) cur = apply(*op, cur);
    else cur = apply_resolvent(std::get<Resolvent>(stage), cur);
  }
  return cur.scaled(form.scale);
}

GeneralizedSeries exp_apply(const ExpForm& form, int order_cap) {
  const int deg = form.degree();
  if (deg == 0) throw Error(ErrorKind::InvalidForm, "exponential generator must have nonzero degree");
  const Direction direction = deg < 0 ? Direction::Descending : Direction::Ascending;
  const Rational base = form.anchor.base();
  const auto in_range = [&](std::int64_t k) {
    return direction == Direction::Ascending ? k < order_cap : k > -order_cap;
  };

  GeneralizedSeries::Terms acc;
  GeneralizedSeries term = form.anchor.with_truncation(std::nullopt, direction);
  bool dropped = false;
  for (const auto& [k, c] : term.terms()) {
    if (in_range(k)) acc.emplace(k, c);
    else dropped = true;
  }
  for (long m = 1; !term.is_zero(); ++m) {
    GeneralizedSeries next = apply_generator(form, term).scaled(Coeff(Rational(1, m)));
    GeneralizedSeries::Terms kept;
    for (const auto& [k, c] : next.terms()) {
      if (in_range(k)) kept.emplace(k, c);
      else dropped = true;
    }
    term = GeneralizedSeries(base, kept);
    for (const auto& [k, c] : kept) {
      auto [it, inserted] = acc.emplace(k, c);
      if (!inserted) it->second += c;
    }
  }
  std::optional<std::int64_t> order;
  if (dropped || !form.anchor.is_exact()) order = order_cap;
  return GeneralizedSeries(base, std::move(acc), order, direction);
}

}  // namespace eulerode
