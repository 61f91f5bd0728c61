#include <benchmark/benchmark.h>

#include "jackcbe/cbe.hpp"
#include "jackcbe/expansion.hpp"
#include "jackcbe/sinesde.hpp"
#include "jackcbe/symcore.hpp"

using namespace jackcbe;

static void BM_JackTable(benchmark::State& state) {
  const AlphaParam alpha(2);
  for (auto _ : state) {
    JackTable t(alpha, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.block(t.max_degree()).entries.size());
  }
}
BENCHMARK(BM_JackTable)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_GesselExpectation(benchmark::State& state) {
  const auto f = CircleFunction::cosine(1, 0.2) + CircleFunction::cosine(2, 0.1);
  const AlphaParam alpha(2);
  shared_jack_table(alpha, 10);
  for (auto _ : state) benchmark::DoNotOptimize(gessel_expectation(f, alpha, static_cast<int>(state.range(0)), 10));
}
BENCHMARK(BM_GesselExpectation)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_SampleCBE(benchmark::State& state) {
  Rng rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_cbe(static_cast<int>(state.range(0)), 2.0, rng));
}
BENCHMARK(BM_SampleCBE)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

static void BM_CompanionRoots(benchmark::State& state) {
  Rng rng = make_stream(2, 0);
  const auto p = characteristic_polynomial(sample_verblunsky(static_cast<int>(state.range(0)), 2.0, rng));
  for (auto _ : state) benchmark::DoNotOptimize(companion_roots(p));
}
BENCHMARK(BM_CompanionRoots)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

static void BM_PruferPsi(benchmark::State& state) {
  Rng rng = make_stream(3, 0);
  const auto v = sample_verblunsky(static_cast<int>(state.range(0)), 2.0, rng);
  std::vector<double> grid;
  for (int i = 0; i <= 256; ++i) grid.push_back(-3.14 + 6.28 * i / 256);
  for (auto _ : state) benchmark::DoNotOptimize(prufer_psi(v, grid));
}
BENCHMARK(BM_PruferPsi)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_SinePath(benchmark::State& state) {
  SDEConfig cfg;
  cfg.x_grid = anchored_grid({-20.0, 20.0}, 40.0 / static_cast<double>(state.range(0)));
  Rng rng = make_stream(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_sine_path(cfg, rng));
}
BENCHMARK(BM_SinePath)->Arg(20)->Arg(80)->Arg(320)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
