#include <benchmark/benchmark.h>

#include "mandelmat/homotopy.hpp"

using namespace mandelmat;

static void BM_TrackPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto paths = track_paths(n, 64);
    benchmark::DoNotOptimize(paths);
  }
}
BENCHMARK(BM_TrackPaths)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CharPolyT(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto f = char_poly_T(n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_CharPolyT)->Arg(1)->Arg(2);

static void BM_Discriminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BiPoly f = char_poly_T(n);
  for (auto _ : state) {
    auto d = discriminant_lambda(f);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Discriminant)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
