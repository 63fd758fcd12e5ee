#include <benchmark/benchmark.h>

#include "lk/catalog.hpp"
#include "lk/koszul.hpp"
#include "lk/leibniz.hpp"

using namespace lk;

static void BM_InvariantFormsF4(benchmark::State& state) {
  LieAlgebra f4 = catalog_get("f4plus");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_forms(f4));
}
BENCHMARK(BM_InvariantFormsF4);

static void BM_AnalyzeG54(benchmark::State& state) {
  LieAlgebra l = catalog_get("g54");
  for (auto _ : state) benchmark::DoNotOptimize(analyze(l));
}
BENCHMARK(BM_AnalyzeG54);

static void BM_AnalyzeFree2Step5(benchmark::State& state) {
  LieAlgebra l = catalog_get("free2step:5");
  for (auto _ : state) benchmark::DoNotOptimize(analyze(l));
}
BENCHMARK(BM_AnalyzeFree2Step5);

static void BM_Hl2G54(benchmark::State& state) {
  LieAlgebra l = catalog_get("g54");
  for (auto _ : state) benchmark::DoNotOptimize(hl2_dim(l));
}
BENCHMARK(BM_Hl2G54);
