#include "siegel/eisenstein2.hpp"
#include "siegel/lfunction.hpp"
#include "siegel/link_calculus.hpp"
#include "siegel/pullback.hpp"

#include <benchmark/benchmark.h>

using namespace siegel;

static void BM_ExpandOperator(benchmark::State& state) {
  const char* sets[] = {"(1,2)", "(1,2),(3,4)", "(1,2),(3,4),(5,6)", "(1,2),(3,4),(5,6),(7,8)"};
  const LinkSet l0 = parse_link_set(sets[state.range(0) - 1]);
  for (auto _ : state) benchmark::DoNotOptimize(expand_operator(l0));
}
BENCHMARK(BM_ExpandOperator)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_SiegelEisenstein2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(siegel_eisenstein2(12, state.range(0)));
}
BENCHMARK(BM_SiegelEisenstein2)->Arg(16)->Arg(64)->Arg(144)->Unit(benchmark::kMillisecond);

static void BM_DecomposePullback(benchmark::State& state) {
  const long n = state.range(0);
  const auto dq = restrict_diagonal(siegel_eisenstein2(12, n * n), n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_pullback(dq, 12, n));
}
BENCHMARK(BM_DecomposePullback)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_LValue(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lvalue_numeric(12, {10, 0}, state.range(0)));
}
BENCHMARK(BM_LValue)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
