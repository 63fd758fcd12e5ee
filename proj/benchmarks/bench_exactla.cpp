#include <benchmark/benchmark.h>

#include "lk/exactla.hpp"

using namespace lk;

namespace {

// deterministic structured matrix with rational entries
QMatrix test_matrix(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Rat((i * 7 + j * 3) % 11 - 5, (i + j) % 4 + 1);
  return m;
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
  QMatrix m = test_matrix(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

static void BM_Nullspace(benchmark::State& state) {
  const int n = int(state.range(0));
  // rank-deficient: duplicate every other row
  QMatrix m = test_matrix(n);
  for (int i = 1; i < n; i += 2)
    for (int j = 0; j < n; ++j) m(i, j) = m(i - 1, j);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(16)->Arg(32)->Arg(64);

static void BM_SparseEliminator(benchmark::State& state) {
  const int cols = int(state.range(0));
  for (auto _ : state) {
    SparseEliminator elim(cols);
    for (int i = 0; i + 1 < cols; ++i) {
      SparseRow r{{i, Rat(1)}, {i + 1, Rat(-(i % 3) - 1)}};
      elim.add_row(std::move(r));
    }
    benchmark::DoNotOptimize(elim.nullspace());
  }
}
BENCHMARK(BM_SparseEliminator)->Arg(256)->Arg(1024);
