#include <random>

#include <gtest/gtest.h>

#include "eulerode/coeff.hpp"
#include "eulerode/errors.hpp"
#include "eulerode/param_poly.hpp"

using namespace eulerode;

namespace {

ParamPoly E(std::vector<Rational> c) { return ParamPoly("E", std::move(c)); }

template <class F>
void expect_kind(F&& f, ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

Coeff random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), shape(0, 2);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  switch (shape(rng)) {
    case 0:
      return Coeff(r());
    case 1:
      return Coeff(E({r(), r(), r()}));
    default: {
      ParamPoly d = E({r(), Rational(1)});
      return Coeff(ParamRatFunc(E({r(), r()}), d));
    }
  }
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  expect_kind([] { Rational::parse("1/0"); }, ErrorKind::DivisionByZero);
}

TEST(Rational, DivisionByZeroThrows) {
  expect_kind([] { Rational(1) / Rational(0); }, ErrorKind::DivisionByZero);
  expect_kind([] { Rational(0).inverse(); }, ErrorKind::DivisionByZero);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(binomial(7, 3), Rational(35));
  EXPECT_EQ(falling_factorial(Rational(1, 2), 3), Rational(3, 8));
  EXPECT_EQ(falling_factorial(Rational(4), 0), Rational(1));
  EXPECT_EQ(Rational(-7, 2).floor(), mpz_class(-4));
}

TEST(ParamPoly, ArithmeticAndEval) {
  const ParamPoly p = E({1, 0, 2});  // 1 + 2E^2
  const ParamPoly q = E({-1, 1});    // E - 1
  EXPECT_EQ(p.str(), "1+2*E^2");
  EXPECT_EQ((p * q).eval(Rational(3)), p.eval(Rational(3)) * q.eval(Rational(3)));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p + (-p)).is_zero());
  auto [quot, rem] = divmod(p, q);
  EXPECT_EQ(quot * q + rem, p);
  EXPECT_EQ(gcd(p * q, q * q), q);
}

TEST(ParamPoly, MixedNamesRejected) {
  expect_kind([] { ParamPoly("a", {0, 1}) + ParamPoly("b", {0, 1}); }, ErrorKind::ParameterMismatch);
}

TEST(ParamPoly, RationalRootsWithMultiplicity) {
  // 3 (E - 1/3)^2 (E + 2) (E^2 - 2)
  ParamPoly p = E({Rational(-1, 3), 1});
  p = p * p * E({2, 1}) * E({-2, 0, 1}) * ParamPoly::constant(3);
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].value, Rational(-2));
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_EQ(roots[1].value, Rational(1, 3));
  EXPECT_EQ(roots[1].multiplicity, 2);
  EXPECT_EQ(count_real_roots(p), 4);
  EXPECT_EQ(count_real_roots(E({1, 0, 1})), 0);
  expect_kind([] { rational_roots(ParamPoly()); }, ErrorKind::ZeroEulerPart);
}

TEST(ParamPoly, RationalRootsLargeDenominators) {
  ParamPoly p = E({Rational(-5, 7), 1}) * E({Rational(11, 13), 1}) * E({Rational(-1, 97), 1});
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].value, Rational(-11, 13));
  EXPECT_EQ(roots[1].value, Rational(1, 97));
  EXPECT_EQ(roots[2].value, Rational(5, 7));
}

TEST(ParamRatFunc, ReducesAndEvaluates) {
  const ParamRatFunc f(E({0, 2}) * E({1, 1}), E({1, 1}) * E({1, 1}));
  EXPECT_EQ(f.str(), "(2*E)/(1+E)");
  EXPECT_EQ(f.eval(Rational(1)), Rational(1));
  expect_kind([&] { f.eval(Rational(-1)); }, ErrorKind::PoleAtValue);
}

TEST(Coeff, NormalizesToSimplestShape) {
  const Coeff e = Coeff::parameter("E");
  EXPECT_EQ((e * e - Coeff(1)) / (e - Coeff(1)), e + Coeff(1));
  EXPECT_EQ(((e * e - Coeff(1)) / (e - Coeff(1))).kind(), Coeff::Kind::Poly);
  EXPECT_EQ((e / e).kind(), Coeff::Kind::Rational);
  EXPECT_EQ((Coeff(1) / (e + Coeff(1))).kind(), Coeff::Kind::RatFunc);
  EXPECT_TRUE((e - e).is_zero());
  expect_kind([&] { e / Coeff(0); }, ErrorKind::DivisionByZero);
  expect_kind([&] { e + Coeff::parameter("b"); }, ErrorKind::ParameterMismatch);
}

TEST(Coeff, FieldAxiomsRandomized) {
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    const Coeff a = random_coeff(rng), b = random_coeff(rng), c = random_coeff(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Coeff(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Coeff, EvalCommutesWithArithmetic) {
  std::mt19937 rng(99);
  const Rational at(7, 3);  // not a pole of any generated denominator E + r with |r| <= 6, den <= 4
  for (int i = 0; i < 300; ++i) {
    const Coeff a = random_coeff(rng), b = random_coeff(rng);
    EXPECT_EQ((a + b).eval(at), a.eval(at) + b.eval(at));
    EXPECT_EQ((a * b).eval(at), a.eval(at) * b.eval(at));
    if (!b.is_zero() && !b.eval(at).is_zero()) EXPECT_EQ((a / b).eval(at), a.eval(at) / b.eval(at));
  }
}
