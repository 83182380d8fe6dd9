// SPDX-License-Identifier: Apache-2.0
// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "tzlab/contour.hpp"
#include "tzlab/dynamics.hpp"
#include "tzlab/exactpoly.hpp"
#include "tzlab/qseries.hpp"
#include "tzlab/transfer.hpp"

using namespace tzlab;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_IndependentSets(benchmark::State& st) {
  Torus t({4, 8});
  for (auto _ : st) benchmark::DoNotOptimize(independent_sets(t.graph(), mode(st)).size());
}

void BM_Compatibility(benchmark::State& st) {
  auto fam = independent_sets(Torus({4, 4}).graph());
  for (auto _ : st) benchmark::DoNotOptimize(compatibility(fam, mode(st)).size());
}

void BM_CycleProduct(benchmark::State& st) {
  auto fam = independent_sets(Torus({4, 2}).graph());
  for (auto _ : st) benchmark::DoNotOptimize(indep_poly_cycle_product(16, fam, mode(st)).size());
}

void BM_QSeries(benchmark::State& st) {
  auto fam = independent_sets(Torus({4, 4}).graph());
  for (auto _ : st) benchmark::DoNotOptimize(q_series(fam, 12, mode(st)).order());
}

void BM_ContourCatalog(benchmark::State& st) {
  ContourSpace cs(Torus({4, 6}));
  for (auto _ : st) {
    ContourCatalog cat(cs, mode(st));
    benchmark::DoNotOptimize(cat.configs().size());
  }
}

void BM_ZeroSearch(benchmark::State& st) {
  auto fam = independent_sets(Torus({2}).graph());
  for (auto _ : st) benchmark::DoNotOptimize(zero_search(fam, 200, 3.0, {}, mode(st)).zeros.size());
}

void BM_Raster(benchmark::State& st) {
  RasterParams p;
  p.window = {-1, 2.5, -1.5, 1.5};
  p.width = 256;
  p.height = 256;
  p.iterations = 200;
  for (auto _ : st) benchmark::DoNotOptimize(spherical_raster(p, mode(st)).values.size());
}

}  // namespace

BENCHMARK(BM_IndependentSets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compatibility)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContourCatalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Raster)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
