#include <benchmark/benchmark.h>

#include "mandelmat/exact.hpp"
#include "mandelmat/matgen.hpp"

using namespace mandelmat;

static void BM_MandelbrotMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = mandelbrot_matrix(n);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * (2 * ((1LL << n) - 1) - 1));
}
BENCHMARK(BM_MandelbrotMatrix)->Arg(10)->Arg(14)->Arg(18)->Arg(20);

static void BM_SMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = s_matrix(n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SMatrix)->Arg(10)->Arg(14)->Arg(18)->Arg(20);

static void BM_MandelbrotInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto inv = mandelbrot_inverse(n);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_MandelbrotInverse)->Arg(8)->Arg(10)->Arg(12);

static void BM_DetExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SparseIntMatrix m = mandelbrot_matrix(n);
  for (auto _ : state) {
    auto d = det_exact(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetExact)->Arg(8)->Arg(10)->Arg(12);

static void BM_Period(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph g = digraph(n);
  for (auto _ : state) benchmark::DoNotOptimize(period(g));
}
BENCHMARK(BM_Period)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
