#include "eulerode/series.hpp"

#include <algorithm>
#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

GeneralizedSeries::GeneralizedSeries(Rational base, Terms terms, std::optional<std::int64_t> order,
                                     Direction direction)
    : base_(std::move(base)), terms_(std::move(terms)), order_(order), direction_(direction) {
  prune();
}

GeneralizedSeries GeneralizedSeries::monomial(const Rational& exponent, const Coeff& c) {
  return GeneralizedSeries(exponent, Terms{{0, c}});
}

GeneralizedSeries GeneralizedSeries::polynomial(std::initializer_list<Coeff> coeffs) {
  Terms t;
  std::int64_t k = 0;
  for (const auto& c : coeffs) t.emplace(k++, c);
  return GeneralizedSeries(Rational(0), std::move(t));
}

void GeneralizedSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !in_window(it->first)) it = terms_.erase(it);
    else ++it;
  }
}

Coeff GeneralizedSeries::coeff(std::int64_t offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff GeneralizedSeries::coeff_at_exponent(const Rational& exponent) const {
  const Rational gap = exponent - base_;
  if (!gap.is_integer()) return Coeff(0);
  return coeff(gap.to_long());
}

bool GeneralizedSeries::in_window(std::int64_t offset) const {
  if (!order_) return true;
  return direction_ == Direction::Ascending ? offset < *order_ : offset > -*order_;
}

GeneralizedSeries GeneralizedSeries::rebased(const Rational& new_base) const {
  const Rational gap = base_ - new_base;
  if (!gap.is_integer())
    throw Error(ErrorKind::IncompatibleBase,
                "bases " + base_.str() + " and " + new_base.str() + " differ by a non-integer");
  const std::int64_t shift = gap.to_long();
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k + shift, c);
  std::optional<std::int64_t> order = order_;
  if (order) *order += direction_ == Direction::Ascending ? shift : -shift;
  return GeneralizedSeries(new_base, std::move(t), order, direction_);
}

GeneralizedSeries GeneralizedSeries::scaled(const Coeff& s) const {
  return transformed([&](const Coeff& c) { return c * s; });
}

GeneralizedSeries GeneralizedSeries::with_truncation(std::optional<std::int64_t> order,
                                                     Direction direction) const {
  return GeneralizedSeries(base_, terms_, order, direction);
}

GeneralizedSeries GeneralizedSeries::restricted(std::int64_t lo, std::int64_t hi) const {
  Terms t;
  for (const auto& [k, c] : terms_)
    if (k >= lo && k <= hi) t.emplace(k, c);
  return GeneralizedSeries(base_, std::move(t), order_, direction_);
}

GeneralizedSeries GeneralizedSeries::transformed(const std::function<Coeff(const Coeff&)>& f) const {
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k, f(c));
  return GeneralizedSeries(base_, std::move(t), order_, direction_);
}

GeneralizedSeries GeneralizedSeries::evaluated(const Rational& value) const {
  return transformed([&](const Coeff& c) { return Coeff(c.eval(value)); });
}

std::optional<std::int64_t> GeneralizedSeries::min_offset() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<std::int64_t> GeneralizedSeries::max_offset() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::string GeneralizedSeries::str(const std::string& var) const {
  if (terms_.empty()) return order_ ? "O(" + var + "^" + (base_ + Rational(*order_)).str() + ")" : "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational exponent = base_ + Rational(it->first);
    std::string c = it->second.str();
    const bool rational = it->second.is_rational();
    bool negative = rational && it->second.as_rational().sign() < 0;
    if (negative) c = (-it->second).str();
    if (!rational) c = "(" + c + ")";
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (exponent.is_zero()) {
      os << c;
      continue;
    }
    if (c != "1") os << c << '*';
    os << var;
    if (!exponent.is_one()) os << '^' << (exponent.is_integer() ? exponent.str() : "(" + exponent.str() + ")");
  }
  if (order_) os << " + O(" << var << "^" << (base_ + Rational(direction_ == Direction::Ascending ? *order_ : -*order_)).str() << ")";
  return os.str();
}

bool operator==(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  return a.base_ == b.base_ && a.terms_ == b.terms_ && a.order_ == b.order_ &&
         (!a.order_ || a.direction_ == b.direction_);
}

GeneralizedSeries series_combine(const GeneralizedSeries& s1, const GeneralizedSeries& s2,
                                 const Coeff& scale) {
  const Rational gap = s1.base() - s2.base();
  if (!gap.is_integer())
    throw Error(ErrorKind::IncompatibleBase,
                "bases " + s1.base().str() + " and " + s2.base().str() + " differ by a non-integer");
  const Rational base = std::min(s1.base(), s2.base());
  const GeneralizedSeries a = s1.rebased(base);
  const GeneralizedSeries b = s2.rebased(base);

  std::optional<std::int64_t> order;
  Direction direction = Direction::Ascending;
  if (a.truncation_order() && b.truncation_order()) {
    if (a.direction() != b.direction())
      throw Error(ErrorKind::InvalidArgument, "cannot combine ascending and descending truncated series");
    order = std::min(*a.truncation_order(), *b.truncation_order());
    direction = a.direction();
  } else if (a.truncation_order()) {
    order = a.truncation_order();
    direction = a.direction();
  } else if (b.truncation_order()) {
    order = b.truncation_order();
    direction = b.direction();
  }

  GeneralizedSeries::Terms t = a.terms();
  for (const auto& [k, c] : b.terms()) {
    auto [it, inserted] = t.emplace(k, c * scale);
    if (!inserted) it->second += c * scale;
  }
  return GeneralizedSeries(base, std::move(t), order, direction);
}

GeneralizedSeries operator+(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  return series_combine(a, b, Coeff(1));
}

GeneralizedSeries operator-(const GeneralizedSeries& a, const GeneralizedSeries& b) {
  return series_combine(a, b, Coeff(-1));
}

}  // namespace eulerode
