#include <benchmark/benchmark.h>

#include "depthcore/bench_harness.hpp"
#include "depthcore/cover_engine.hpp"

using namespace dd;

static void CoverUpdate(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n + 1, 23, true);
  CoverEngine e(Validation::Fast);
  e.bulk_load(std::vector<Pt>(pts.begin(), pts.begin() + static_cast<long>(n)));
  const Pt q = pts[n];
  for (auto _ : state) {
    PointId id = e.insert(q);
    e.erase(id);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(CoverUpdate)->RangeMultiplier(2)->Range(1 << 7, 1 << 9)->Complexity()->Unit(benchmark::kMillisecond);

static void CoverBulkLoad(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n, 29, true);
  for (auto _ : state) {
    CoverEngine e(Validation::Fast);
    e.bulk_load(pts);
    benchmark::DoNotOptimize(e.level_count());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(CoverBulkLoad)->RangeMultiplier(2)->Range(1 << 7, 1 << 9)->Complexity()->Unit(benchmark::kMillisecond);

static void CoverContourReport(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n, 31, true);
  CoverEngine e(Validation::Fast);
  e.bulk_load(pts);
  int k = static_cast<int>(n / 4) + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.cover_contour(k));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(CoverContourReport)->RangeMultiplier(2)->Range(1 << 7, 1 << 9)->Complexity()->Unit(benchmark::kMillisecond);
