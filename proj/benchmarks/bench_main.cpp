#include <benchmark/benchmark.h>

#include "pgsat/covering_code.hpp"
#include "pgsat/enumerate.hpp"
#include "pgsat/group.hpp"
#include "pgsat/saturation.hpp"

using namespace pgsat;

namespace {

const PointSet& cap16() {
  static const PointSet s(Dimension(4),
                          {1, 2, 4, 7, 8, 11, 13, 14, 16, 19, 21, 22, 25, 26, 28, 31});
  return s;
}

const PointSet& nc10() {
  static const PointSet s(Dimension(4), {1, 2, 4, 5, 8, 10, 16, 22, 27, 28});
  return s;
}

void bm_saturation(benchmark::State& state) {
  const PointSet& s = cap16();
  for (auto _ : state) benchmark::DoNotOptimize(is_one_saturating(s));
}
BENCHMARK(bm_saturation);

void bm_minimality(benchmark::State& state) {
  const PointSet& s = nc10();
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_one_saturating(s));
}
BENCHMARK(bm_minimality);

void bm_is_canonical(benchmark::State& state) {
  const PointSet& s = nc10();
  for (auto _ : state) benchmark::DoNotOptimize(is_canonical(s));
}
BENCHMARK(bm_is_canonical);

void bm_canonical_form(benchmark::State& state) {
  const PointSet s(Dimension(4), {3, 5, 9, 17, 30, 21, 14, 7, 26, 12});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s).members.members());
}
BENCHMARK(bm_canonical_form);

void bm_stabilizer(benchmark::State& state) {
  const PointSet& s = nc10();
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_order(s));
}
BENCHMARK(bm_stabilizer);

void bm_covering_radius(benchmark::State& state) {
  const CoverCode code = CoverCode::from_set(cap16());
  for (auto _ : state) {
    CoverCode fresh(code.codimension(), code.columns());  // defeat the radius cache
    benchmark::DoNotOptimize(fresh.covering_radius());
  }
}
BENCHMARK(bm_covering_radius);

void bm_enumerate_dim3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(Dimension(3)).size());
}
BENCHMARK(bm_enumerate_dim3)->Unit(benchmark::kMillisecond);

void bm_brute_force_dim3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_classes(Dimension(3)).size());
}
BENCHMARK(bm_brute_force_dim3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
