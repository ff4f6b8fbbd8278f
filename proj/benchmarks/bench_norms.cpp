#include <benchmark/benchmark.h>

#include <vector>

#include "bhlab/bhlab.hpp"

namespace {

using namespace bhlab;

SearchConfig bench_config(unsigned resolution) {
  SearchConfig cfg;
  cfg.starts = 8;
  cfg.grid_resolution = resolution;
  cfg.seed = 1;
  cfg.threads = 1;
  return cfg;
}

void BM_SupNormLower(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto p = random_polynomial(CoefficientKind::steinhaus, 4, 2, n, 1.0, 42);
  const auto cfg = bench_config(16);
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm_lower(p, cfg));
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_SupNormLower)->Arg(3)->Arg(5)->Arg(8);

void BM_SupNormUpperGrid(benchmark::State& state) {
  const auto res = static_cast<unsigned>(state.range(0));
  const auto p = random_polynomial(CoefficientKind::steinhaus, 3, 2, 4, 1.0, 7);
  const auto cfg = bench_config(res);
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm_upper(p, cfg));
  state.counters["grid_points"] = static_cast<double>(res) * res * res;
}
BENCHMARK(BM_SupNormUpperGrid)->Arg(8)->Arg(16)->Arg(32);

void BM_MultilinearLower(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto p = random_polynomial(CoefficientKind::gaussian, m, 2, 4, 1.0, 3);
  const auto cfg = bench_config(16);
  for (auto _ : state) benchmark::DoNotOptimize(multilinear_sup_norm_lower(p, cfg));
}
BENCHMARK(BM_MultilinearLower)->DenseRange(2, 6, 2);

void BM_EnumerateLambda(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lambda(8, 3, n));
}
BENCHMARK(BM_EnumerateLambda)->Arg(4)->Arg(8)->Arg(16);

void BM_Polarization(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto p = random_polynomial(CoefficientKind::gaussian, m, 2, 3, 1.0, 5);
  Rng rng(9);
  std::vector<std::vector<Complex>> points(m, std::vector<Complex>(3));
  for (auto& x : points) {
    for (auto& z : x) z = rng.unit_phase();
  }
  for (auto _ : state) benchmark::DoNotOptimize(polarization_eval(p, points));
}
BENCHMARK(BM_Polarization)->DenseRange(2, 8, 2);

void BM_ProofChainTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(constant_table(2, 2, 10000, BetaConfig{}, 1));
}
BENCHMARK(BM_ProofChainTable);

}  // namespace

BENCHMARK_MAIN();
