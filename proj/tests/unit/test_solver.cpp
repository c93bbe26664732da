#include <random>

#include <gtest/gtest.h>

#include "eulerode/errors.hpp"
#include "eulerode/solver.hpp"
#include "oracles.hpp"

using namespace eulerode;

namespace {

LinDiffOp hermite_op(int n) {
  return LinDiffOp::euler() - LinDiffOp::scalar(n) - Coeff(Rational(1, 2)) * LinDiffOp::d(2);
}

void expect_certified(const LinDiffOp& op, const SolveReport& r) {
  EXPECT_TRUE(residual(op, r.solution).is_zero()) << residual(op, r.solution).str();
  EXPECT_TRUE(ref::naive_residual_zero(op, r.solution)) << op.str() << " on " << r.solution.str();
}

}  // namespace

TEST(MasterSolve, HermiteTerminates) {
  const SolveReport r = master_solve(hermite_op(2), 2);
  EXPECT_EQ(r.status, SolveStatus::Terminated);
  EXPECT_EQ(r.solution.str(), "x^2 - 1/2");
  EXPECT_EQ(r.iterations_used, 1);
  expect_certified(hermite_op(2), r);
}

TEST(MasterSolve, NonIntegerHermiteTruncates) {
  const SolveReport r = master_solve(hermite_op(0) - LinDiffOp::scalar(Rational(1, 2)), Rational(1, 2), 10);
  EXPECT_EQ(r.status, SolveStatus::Truncated);
  EXPECT_EQ(r.solution.truncation_order(), std::optional<std::int64_t>(10));
  EXPECT_EQ(r.solution.direction(), Direction::Descending);
  expect_certified(hermite_op(0) - LinDiffOp::scalar(Rational(1, 2)), r);
}

TEST(MasterSolve, IndicialMismatch) {
  try {
    master_solve(hermite_op(2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndicialMismatch);
  }
}

TEST(MasterSolve, MixedDegreeRemainder) {
  const LinDiffOp op = LinDiffOp::euler() + LinDiffOp::x() + LinDiffOp::d();
  try {
    master_solve(op, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedDegreeRemainder);
  }
}

TEST(MasterSolve, ResonanceCarriesOffset) {
  // D^2 - 1 + x^2 at lambda = -1 hits F(1) = 0 at offset 2.
  const LinDiffOp op = LinDiffOp::euler() * LinDiffOp::euler() - LinDiffOp::scalar(1) + LinDiffOp::x(2);
  try {
    master_solve(op, -1);
    FAIL();
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.offset(), 2);
    EXPECT_EQ(e.kind(), ErrorKind::Resonance);
  }
  expect_certified(op, master_solve(op, 1, 12));
}

TEST(MasterSolve, ResonanceSkippedWhenSourceVanishes) {
  // F = D (D - 2) vanishes at offset 2, but x^3 only reaches offsets 3, 6, ...
  const LinDiffOp F = LinDiffOp::euler() * (LinDiffOp::euler() - LinDiffOp::scalar(2));
  const LinDiffOp op = F + LinDiffOp::x(3);
  const SolveReport r = master_solve(op, 0, 10);
  EXPECT_EQ(r.resonances_hit, (std::vector<std::int64_t>{2}));
  expect_certified(op, r);

  // x^3 d kills the anchor outright.
  const SolveReport r2 = master_solve(F + LinDiffOp::mono(1, 3, 1), 0);
  EXPECT_EQ(r2.status, SolveStatus::Terminated);
  EXPECT_EQ(r2.iterations_used, 0);
}

TEST(MasterSolve, SymbolicParameterSeries) {
  const Coeff E = Coeff::parameter("E");
  const LinDiffOp op = LinDiffOp::mono(1, 2, 2) + LinDiffOp::mono(Coeff(2) * E, 2, 0) - LinDiffOp::x(4);
  const SolveReport r = master_solve(op, 0, 12);
  EXPECT_EQ(r.solution.coeff(2), -E);
  expect_certified(op, r);
}

TEST(MasterSolve, MaxOrderBoundsTheWindow) {
  const LinDiffOp op = LinDiffOp::euler() - LinDiffOp::x();  // y = e^x
  for (int K : {1, 2, 5, 20}) {
    const SolveReport r = master_solve(op, 0, K);
    EXPECT_EQ(r.solution.truncation_order(), std::optional<std::int64_t>(K));
    for (int k = 0; k < K; ++k) EXPECT_EQ(r.solution.coeff(k), Coeff(Rational(1) / factorial(k)));
    expect_certified(op, r);
  }
  EXPECT_THROW(master_solve(op, 0, 0), Error);
}

TEST(MasterSolve, RandomizedMasterTheorem) {
  std::mt19937 rng(20240607);
  int symbolic = 0, truncated = 0, terminated = 0;
  for (int i = 0; i < 250; ++i) {
    const ref::MasterCase mc = ref::random_master_case(rng);
    const SolveReport r = master_solve(mc.op, mc.lambda, 12);
    expect_certified(mc.op, r);
    EXPECT_EQ(r.solution.coeff(0), Coeff(1));
    EXPECT_EQ(r.solution.direction(), mc.ascending ? Direction::Ascending : Direction::Descending);
    symbolic += mc.op.parameter_name().has_value();
    (r.status == SolveStatus::Truncated ? truncated : terminated) += 1;
  }
  EXPECT_GT(symbolic, 10);
  EXPECT_GT(truncated, 100);
}
