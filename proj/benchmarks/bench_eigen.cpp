#include <benchmark/benchmark.h>

#include <vector>

#include "mandelmat/eigvec.hpp"
#include "mandelmat/matgen.hpp"
#include "mandelmat/polyeval.hpp"
#include "mandelmat/singular.hpp"
#include "mandelmat/sparse.hpp"

using namespace mandelmat;

static void BM_PerronRoot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perron_root(n).rho);
}
BENCHMARK(BM_PerronRoot)->Arg(7)->Arg(14)->Arg(20)->Arg(26);

static void BM_EigvecSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double rho = perron_root(n).rho;
  for (auto _ : state) {
    auto v = eigenvector_solve(n, rho);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * ((1LL << n) - 1));
}
BENCHMARK(BM_EigvecSolve)->Arg(10)->Arg(14)->Arg(18);

static void BM_EigvecRecursive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = eigenvector_recursive(n);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * ((1LL << n) - 1));
}
BENCHMARK(BM_EigvecRecursive)->Arg(10)->Arg(14)->Arg(18);

static void BM_SparseMatvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SparseIntMatrix s = s_matrix(n);
  const CsrView csr(s);
  std::vector<double> x(static_cast<std::size_t>(s.dim()), 1.0);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    csr.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * s.nnz());
}
BENCHMARK(BM_SparseMatvec)->Arg(14)->Arg(18)->Arg(20);

static void BM_DominantTriple(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = dominant_singular_triple(n);
    benchmark::DoNotOptimize(t.sigma);
  }
}
BENCHMARK(BM_DominantTriple)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
