#include <benchmark/benchmark.h>

#include "lk/rootkit.hpp"

using namespace lk;

static void BM_BuildE8Roots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(SimpleType::E8));
}
BENCHMARK(BM_BuildE8Roots);

static void BM_PropertyPE8(benchmark::State& state) {
  RootSystem rs = build_root_system(SimpleType::E8);
  for (auto _ : state) benchmark::DoNotOptimize(property_P(rs));
}
BENCHMARK(BM_PropertyPE8);

static void BM_NilradicalE6(benchmark::State& state) {
  // includes the sign cocycle and the full Jacobi verification
  for (auto _ : state) benchmark::DoNotOptimize(nilradical_exceptional(SimpleType::E6));
}
BENCHMARK(BM_NilradicalE6);

static void BM_NilradicalB4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nilradical_classical(SimpleType::B, 4));
}
BENCHMARK(BM_NilradicalB4);
