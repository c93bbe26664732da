#include <benchmark/benchmark.h>

#include "eulerode/classical.hpp"
#include "eulerode/solver.hpp"
#include "eulerode/spectral.hpp"

using namespace eulerode;

static void BM_HermiteTerminating(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LinDiffOp op = LinDiffOp::euler() - LinDiffOp::scalar(n) - Coeff(Rational(1, 2)) * LinDiffOp::d(2);
  for (auto _ : state) benchmark::DoNotOptimize(master_solve(op, n));
}
BENCHMARK(BM_HermiteTerminating)->Arg(4)->Arg(12)->Arg(24);

static void BM_ExponentialTruncated(benchmark::State& state) {
  const LinDiffOp op = LinDiffOp::euler() - LinDiffOp::x();
  for (auto _ : state) benchmark::DoNotOptimize(master_solve(op, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExponentialTruncated)->Arg(16)->Arg(64);

static void BM_SymbolicOscillator(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oscillator_series(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicOscillator)->Arg(8)->Arg(16);

static void BM_ClosedFormBessel(benchmark::State& state) {
  FamilySpec s;
  s.family = Family::Bessel;
  s.n = 2;
  s.params["nu"] = Rational(2);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form(s, 24));
}
BENCHMARK(BM_ClosedFormBessel);

static void BM_SexticQes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sextic_qes(4, 1, 16));
}
BENCHMARK(BM_SexticQes);
