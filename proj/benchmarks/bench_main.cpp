#include <benchmark/benchmark.h>

#include "ezeta/epstein.hpp"
#include "ezeta/hardy.hpp"
#include "ezeta/qform.hpp"
#include "ezeta/scenario.hpp"

namespace {

using ezeta::Complex;
using ezeta::QuadraticForm;

void BM_ThetaEval(benchmark::State& state) {
  const QuadraticForm f(1, 0, 1);
  const Complex s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::theta_continuation_eval(f, s).value);
}
BENCHMARK(BM_ThetaEval)->Arg(14)->Arg(100)->Arg(500);

void BM_DirichletSeries(benchmark::State& state) {
  const QuadraticForm f(1, 1, 1);
  const Complex s(3.0, 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::dirichlet_series_eval(f, s, state.range(0)).value);
}
BENCHMARK(BM_DirichletSeries)->Arg(1000)->Arg(100000);

void BM_ApproxEval(benchmark::State& state) {
  const QuadraticForm f(1, 0, 1);
  const double t = static_cast<double>(state.range(0));
  ezeta::ApproxParams p;
  p.t = t;
  p.X = t * t;
  const Complex s(0.5, t);
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::approx_eval(f, s, p).value);
}
BENCHMARK(BM_ApproxEval)->Arg(20)->Arg(80);

void BM_HardyW(benchmark::State& state) {
  const QuadraticForm f(1, 0, 1);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::hardy_w(f, t));
}
BENCHMARK(BM_HardyW)->Arg(50)->Arg(500);

void BM_EnumerateAnnulus(benchmark::State& state) {
  const QuadraticForm f(2, 1, 3);
  const double n = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::enumerate_annulus(f, n, 2.0 * n).size());
}
BENCHMARK(BM_EnumerateAnnulus)->Arg(1000)->Arg(100000);

void BM_RawDoubleSum(benchmark::State& state) {
  const ezeta::ExpSumScenario sc = ezeta::desk_scenario(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::raw_double_sum(sc).total);
}
BENCHMARK(BM_RawDoubleSum)->DenseRange(0, 4);

void BM_ZeroScan(benchmark::State& state) {
  const QuadraticForm f(1, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ezeta::sign_change_scan(f, 5.0, 50.0, 0.05).size());
}
BENCHMARK(BM_ZeroScan)->Unit(benchmark::kMillisecond);

}  // namespace
