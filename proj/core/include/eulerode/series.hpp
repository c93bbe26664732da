#ifndef EULERODE_SERIES_HPP
#define EULERODE_SERIES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "eulerode/coeff.hpp"

namespace eulerode {

// Which way a truncated series extends. Ascending series are exact for
// offsets k < K; descending ones for k > -K.
enum class Direction { Ascending, Descending };

// x^base * sum_k c_k x^k over a finite set of integer offsets k.
// 
// A series is either exact (a finite sum that is the whole answer) or
// truncated at order K, in which case only offsets inside the window are
// stored and every stored coefficient is final.
class GeneralizedSeries {
 public:
  using Terms = std::map<std::int64_t, Coeff>;

  GeneralizedSeries() = default;
  explicit GeneralizedSeries(Rational base, Terms terms = {},
                             std::optional<std::int64_t> order = std::nullopt,
                             Direction direction = Direction::Ascending);

  static GeneralizedSeries monomial(const Rational& exponent, const Coeff& c = Coeff(1));
  static GeneralizedSeries zero(const Rational& base = Rational(0)) { return GeneralizedSeries(base); }

  // Exact polynomial from ascending coefficients c_0 + c_1 x + ...
  static GeneralizedSeries polynomial(std::initializer_list<Coeff> coeffs);

  const Rational& base() const { return base_; }
  const Terms& terms() const { return terms_; }
  std::optional<std::int64_t> truncation_order() const { return order_; }
  Direction direction() const { return direction_; }
  bool is_exact() const { return !order_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(std::int64_t offset) const;
  // Coefficient of x^exponent; zero when the exponent is not base + integer.
  Coeff coeff_at_exponent(const Rational& exponent) const;

  // True if the offset lies in the range this series is exact on.
  bool in_window(std::int64_t offset) const;

  // Same function anchored at a base smaller by a nonnegative integer.
  GeneralizedSeries rebased(const Rational& new_base) const;
  GeneralizedSeries scaled(const Coeff& s) const;
  GeneralizedSeries with_truncation(std::optional<std::int64_t> order, Direction direction) const;
  // Drops nonzero terms at offsets outside [lo, hi].
  GeneralizedSeries restricted(std::int64_t lo, std::int64_t hi) const;
  GeneralizedSeries transformed(const std::function<Coeff(const Coeff&)>& f) const;
  // Substitute the free parameter by a rational value everywhere.
  GeneralizedSeries evaluated(const Rational& value) const;

  std::optional<std::int64_t> min_offset() const;
  std::optional<std::int64_t> max_offset() const;

  // Human-readable sum, highest exponent first, e.g. "x^3 - 3/2*x".
  std::string str(const std::string& var = "x") const;

  friend bool operator==(const GeneralizedSeries& a, const GeneralizedSeries& b);

 private:
  void prune();

  Rational base_{0};
  Terms terms_;
  std::optional<std::int64_t> order_;
  Direction direction_ = Direction::Ascending;
};

// s1 + scale * s2, re-anchored at the smaller base exponent; the window is
// the narrower of the two. IncompatibleBase if the bases differ by a
// non-integer.
GeneralizedSeries series_combine(const GeneralizedSeries& s1, const GeneralizedSeries& s2,
                                 const Coeff& scale = Coeff(1));

GeneralizedSeries operator+(const GeneralizedSeries& a, const GeneralizedSeries& b);
GeneralizedSeries operator-(const GeneralizedSeries& a, const GeneralizedSeries& b);

}  // namespace eulerode

#endif  // EULERODE_SERIES_HPP
