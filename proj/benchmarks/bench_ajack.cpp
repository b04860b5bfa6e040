#include <benchmark/benchmark.h>

#include "ajack/jack.hpp"
#include "ajack/modular.hpp"
#include "ajack/theta.hpp"

namespace {

void BM_JackSeries(benchmark::State& state) {
  const ajack::JackLabel label{2, 3, 4};
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ajack::jack_series(label, order));
}
BENCHMARK(BM_JackSeries)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_JackSeriesLevel(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ajack::jack_series({K, 2, 2 + K / 2}, 6));
}
BENCHMARK(BM_JackSeriesLevel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SProduct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ajack::build_S_product(4, k));
}
BENCHMARK(BM_SProduct)->DenseRange(1, 5);

void BM_SMacdonald(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ajack::build_S_macdonald(4, k));
}
BENCHMARK(BM_SMacdonald)->DenseRange(1, 5);

void BM_ThetaSLaws(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ajack::theta_s_laws(20, 1, 1e-9));
}
BENCHMARK(BM_ThetaSLaws);

void BM_VerifyModular(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ajack::verify_modular_numeric(2, 3, 0.17, 0.0, ajack::Complex(0, 1.3), 20, 1e-6));
}
BENCHMARK(BM_VerifyModular)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
