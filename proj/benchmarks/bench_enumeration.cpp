#include <benchmark/benchmark.h>

#include "areawalk/enumeration.hpp"
#include "areawalk/oracle.hpp"
#include "areawalk/quantum_torus.hpp"
#include "areawalk/restricted.hpp"

using namespace areawalk;

namespace {

void BM_GfOpen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_open(n, 1));
}
BENCHMARK(BM_GfOpen)->DenseRange(8, 28, 4)->Unit(benchmark::kMillisecond);

void BM_GfDiagonal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_diagonal(n, 1));
}
BENCHMARK(BM_GfDiagonal)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_CountOpenEven(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_open_even(n, 1));
}
BENCHMARK(BM_CountOpenEven)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_DpEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dp_enumerate(n, kDefaultDpCap, 1));
}
BENCHMARK(BM_DpEnumerate)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(n, kDefaultBruteCap, 1));
}
BENCHMARK(BM_BruteForce)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_TraceGf(benchmark::State& state) {
  const TorusRepresentation rep = build_rep_q(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_gf(rep, 12));
}
BENCHMARK(BM_TraceGf)->Arg(1)->Arg(3)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PolyMul(benchmark::State& state) {
  const AreaPolynomial a = gf_open(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul(a, a));
}
BENCHMARK(BM_PolyMul)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
