#include <benchmark/benchmark.h>

#include "mbpns/mbpns.hpp"

namespace {

using namespace mbpns;

SamplingConfig config(int d, int M, std::int64_t N) {
  SamplingConfig cfg;
  cfg.d = d;
  cfg.M = M;
  cfg.N = Rational(N);
  cfg.Delta = Rational(1, N);
  cfg.delta = Rational(1, (2 * M + 1) * N);
  cfg.T = Rational(2);
  return validate_config(cfg);
}

void BM_TakeSamples(benchmark::State& state) {
  const auto sig = random_signal(config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(take_samples(sig));
}
BENCHMARK(BM_TakeSamples)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Args({3, 1});

void BM_Analyze(benchmark::State& state) {
  const auto grid = take_samples(random_signal(config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2), 1));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(grid));
}
BENCHMARK(BM_Analyze)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Args({3, 1});

void BM_ReconstructIterative(benchmark::State& state) {
  const auto spectra =
      analyze_all(take_samples(random_signal(config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2), 1)));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_iterative(spectra));
}
BENCHMARK(BM_ReconstructIterative)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Args({3, 1});

void BM_ReconstructOracle(benchmark::State& state) {
  const auto spectra =
      analyze_all(take_samples(random_signal(config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2), 1)));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_oracle(spectra));
}
BENCHMARK(BM_ReconstructOracle)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Args({3, 1});

void BM_VandermondeSystem(benchmark::State& state) {
  SamplingConfig cfg;
  cfg.M = static_cast<int>(state.range(0));
  cfg.N = Rational(2);
  cfg.Delta = Rational(1, 2);
  cfg.delta = Rational(1, 3 * (2 * cfg.M + 1) * 2);
  for (auto _ : state) benchmark::DoNotOptimize(VandermondeSystem(nodes_from_geometry(cfg, 0, Rational(0))));
}
BENCHMARK(BM_VandermondeSystem)->DenseRange(1, 5);

void BM_PerFrequencyExtremes(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(per_frequency_extremes(cfg));
}
BENCHMARK(BM_PerFrequencyExtremes)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
