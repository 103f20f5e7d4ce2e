#include <benchmark/benchmark.h>

#include "qyoung/garnir.hpp"
#include "qyoung/hecke.hpp"
#include "qyoung/linalg.hpp"
#include "qyoung/young.hpp"
#include "qyoung/young_basis.hpp"

namespace {

void BM_HeckeConstruct(benchmark::State& state) {
  for (auto _ : state) {
    qyoung::HeckeAlgebra h(3);
    benchmark::DoNotOptimize(h.size());
  }
}
BENCHMARK(BM_HeckeConstruct);

void BM_SymbolicProduct(benchmark::State& state) {
  qyoung::HeckeAlgebra h(3);
  qyoung::HeckeElement a = qyoung::young::Y21_123(h);
  qyoung::HeckeElement g = qyoung::garnir::garnir_element(h);
  for (auto _ : state) benchmark::DoNotOptimize(h.mul(g, a));
}
BENCHMARK(BM_SymbolicProduct);

void BM_LeftRegularMatrix(benchmark::State& state) {
  qyoung::HeckeAlgebra h(3);
  qyoung::YoungBasis yb(h);
  qyoung::HeckeElement b1 = h.word({1});
  for (auto _ : state) benchmark::DoNotOptimize(yb.left_regular_matrix(b1).rows());
}
BENCHMARK(BM_LeftRegularMatrix);

void BM_Charpoly(benchmark::State& state) {
  qyoung::HeckeAlgebra h(3);
  qyoung::YoungBasis yb(h);
  qyoung::FieldMatrix m = yb.left_regular_matrix(h.word({1}));
  for (auto _ : state) benchmark::DoNotOptimize(qyoung::charpoly(m).size());
}
BENCHMARK(BM_Charpoly);

void BM_Nullspace(benchmark::State& state) {
  qyoung::HeckeAlgebra h(3);
  qyoung::FieldMatrix m = h.left_mult_matrix(qyoung::young::Y21_123(h));
  for (auto _ : state) benchmark::DoNotOptimize(qyoung::nullspace(m).size());
}
BENCHMARK(BM_Nullspace);

}  // namespace

BENCHMARK_MAIN();
