#include <benchmark/benchmark.h>

#include "eulerode/manybody.hpp"

using namespace eulerode;

static void BM_JackNumeric(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const Partition lambda({w});
  for (auto _ : state) benchmark::DoNotOptimize(jack(lambda, 3, Rational(2)));
}
BENCHMARK(BM_JackNumeric)->Arg(2)->Arg(4)->Arg(6);

static void BM_JackSymbolic(benchmark::State& state) {
  const Coeff b = Coeff::parameter("b");
  for (auto _ : state) benchmark::DoNotOptimize(jack(Partition::parse("3"), 3, b));
}
BENCHMARK(BM_JackSymbolic);

static void BM_CsmState(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(csm_state(Partition::parse("2,1"), 3, Rational(1)));
}
BENCHMARK(BM_CsmState);
BENCHMARK_MAIN();
