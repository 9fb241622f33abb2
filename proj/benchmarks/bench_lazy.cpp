// Lazy handles versus stored dense copies for the operations the catalog
// is typically used for.

#include <benchmark/benchmark.h>

#include <typedmatrices/typedmatrices.hpp>

using namespace tmat;

namespace {

void BM_IsSymmetricLazy(benchmark::State& state) {
  const MatrixHandle h = minij(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_symmetric(h));
}

void BM_IsSymmetricDense(benchmark::State& state) {
  const DenseMatrix a = minij(static_cast<std::size_t>(state.range(0))).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(generic::is_symmetric(a));
}

void BM_SumLazy(benchmark::State& state) {
  const MatrixHandle h = cauchy(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double s = 0;
    for (std::size_t j = 1; j <= h.cols(); ++j)
      for (std::size_t i = 1; i <= h.rows(); ++i) s += h.element_unchecked(i, j).to_double();
    benchmark::DoNotOptimize(s);
  }
}

void BM_SumDense(benchmark::State& state) {
  const Dense<double> a = cauchy(static_cast<std::size_t>(state.range(0))).materialize().get<double>();
  for (auto _ : state) {
    double s = 0;
    for (double x : a.data()) s += x;
    benchmark::DoNotOptimize(s);
  }
}

void BM_Materialize(benchmark::State& state) {
  const MatrixHandle h = cauchy(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.materialize());
  state.SetBytesProcessed(state.iterations() * state.range(0) * state.range(0) * 8);
}

void BM_DetClosedHilbert(benchmark::State& state) {
  const MatrixHandle h = hilbert(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(h));
}

void BM_DetExactLuHilbert(benchmark::State& state) {
  const DenseMatrix a = hilbert(static_cast<std::size_t>(state.range(0))).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(generic::determinant(a));
}

void BM_DetFloatLu(benchmark::State& state) {
  const DenseMatrix a = lotkin(static_cast<std::size_t>(state.range(0)), ScalarKind::float64).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(generic::determinant(a));
}

void BM_EigvalsClosed(benchmark::State& state) {
  const MatrixHandle h = minij(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigvals(h));
}

void BM_EigvalsJacobi(benchmark::State& state) {
  const DenseMatrix a = minij(static_cast<std::size_t>(state.range(0))).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(generic::eigvals(a));
}

}  // namespace

BENCHMARK(BM_IsSymmetricLazy)->Arg(1000);
BENCHMARK(BM_IsSymmetricDense)->Arg(1000);
BENCHMARK(BM_SumLazy)->Arg(1000);
BENCHMARK(BM_SumDense)->Arg(1000);
BENCHMARK(BM_Materialize)->Arg(100)->Arg(1000);
BENCHMARK(BM_DetClosedHilbert)->DenseRange(2, 6, 2);
BENCHMARK(BM_DetExactLuHilbert)->DenseRange(2, 6, 2);
BENCHMARK(BM_DetFloatLu)->Arg(50)->Arg(200);
BENCHMARK(BM_EigvalsClosed)->Arg(50);
BENCHMARK(BM_EigvalsJacobi)->Arg(50);
BENCHMARK_MAIN();
