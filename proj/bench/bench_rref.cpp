#include <benchmark/benchmark.h>

#include "hcyc/exactlin/rref.hpp"

#include <random>

using namespace hcyc;

static std::vector<Vec> random_rows(const FieldSpec& f, int rows, int cols, int fill_pct) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pct(0, 99), val(-9, 9);
  std::vector<Vec> out(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (pct(rng) < fill_pct) {
        int v = val(rng);
        if (v) out[i].emplace_back(j, f.reduce(Scalar(v)));
      }
  return out;
}

static void BM_rref_serial(benchmark::State& st) {
  FieldSpec f = st.range(1) ? FieldSpec::prime(101) : FieldSpec::rationals();
  auto rows = random_rows(f, int(st.range(0)), int(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(rref_serial(rows, int(st.range(0)), f).rank());
}

static void BM_rref_parallel(benchmark::State& st) {
  FieldSpec f = st.range(1) ? FieldSpec::prime(101) : FieldSpec::rationals();
  auto rows = random_rows(f, int(st.range(0)), int(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(rref_parallel(rows, int(st.range(0)), f).rank());
}

BENCHMARK(BM_rref_serial)->Args({128, 0})->Args({256, 0})->Args({256, 1})->Args({512, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Args({128, 0})->Args({256, 0})->Args({256, 1})->Args({512, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
