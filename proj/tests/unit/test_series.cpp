#include <gtest/gtest.h>

#include "eulerode/errors.hpp"
#include "eulerode/series.hpp"

using namespace eulerode;

TEST(Series, PrunesZerosAndOutOfWindowTerms) {
  GeneralizedSeries s(Rational(1, 2), {{0, Coeff(1)}, {1, Coeff(0)}, {3, Coeff(2)}, {5, Coeff(7)}}, 4);
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_TRUE(s.in_window(3));
  EXPECT_FALSE(s.in_window(4));
  EXPECT_EQ(s.coeff(5), Coeff(0));
  EXPECT_EQ(s.coeff_at_exponent(Rational(7, 2)), Coeff(2));
  EXPECT_EQ(s.coeff_at_exponent(Rational(3)), Coeff(0));

  GeneralizedSeries d(Rational(0), {{0, Coeff(1)}, {-2, Coeff(1)}, {-9, Coeff(1)}}, 5, Direction::Descending);
  EXPECT_EQ(d.terms().size(), 2u);
  EXPECT_TRUE(d.in_window(-4));
  EXPECT_FALSE(d.in_window(-5));
}

TEST(Series, CombineReanchorsAndNarrows) {
  const GeneralizedSeries a(Rational(2), {{0, Coeff(1)}});
  const GeneralizedSeries b(Rational(0), {{0, Coeff(3)}, {1, Coeff(1)}, {6, Coeff(1)}}, 5);
  const GeneralizedSeries s = a + b;
  EXPECT_EQ(s.base(), Rational(0));
  EXPECT_EQ(s.coeff(2), Coeff(1));
  EXPECT_EQ(s.coeff(0), Coeff(3));
  EXPECT_EQ(s.truncation_order(), std::optional<std::int64_t>(5));
  EXPECT_TRUE((b - b).is_zero());
}

TEST(Series, IncompatibleBaseRejected) {
  const GeneralizedSeries a = GeneralizedSeries::monomial(Rational(1, 2));
  const GeneralizedSeries b = GeneralizedSeries::monomial(Rational(0));
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompatibleBase);
  }
}

TEST(Series, MixedDirectionsRejected) {
  const GeneralizedSeries a(Rational(0), {{0, Coeff(1)}}, 3, Direction::Ascending);
  const GeneralizedSeries b(Rational(0), {{0, Coeff(1)}}, 3, Direction::Descending);
  EXPECT_THROW((void)(a + b), Error);
}

TEST(Series, EvaluateParameter) {
  const Coeff e = Coeff::parameter("E");
  const GeneralizedSeries s(Rational(0), {{0, Coeff(1)}, {2, -e}, {4, e * e}});
  const GeneralizedSeries v = s.evaluated(Rational(1, 2));
  EXPECT_EQ(v, GeneralizedSeries(Rational(0), {{0, Coeff(1)}, {2, Coeff(Rational(-1, 2))}, {4, Coeff(Rational(1, 4))}}));
}

TEST(Series, Printing) {
  EXPECT_EQ(GeneralizedSeries::polynomial({Coeff(Rational(-1, 2)), Coeff(0), Coeff(1)}).str(), "x^2 - 1/2");
}
