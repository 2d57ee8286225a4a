#include <benchmark/benchmark.h>

#include "depthcore/anchor_fan.hpp"
#include "depthcore/bench_harness.hpp"
#include "depthcore/rank_engine.hpp"

using namespace dd;

static void FanUpdate(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n + 2, 7, false);
  PointSet ps(false, Validation::Fast);
  PointId anchor = ps.insert(pts[0]);
  for (std::size_t i = 1; i <= n; ++i) ps.insert(pts[i]);
  AnchorFan fan = AnchorFan::build(ps, anchor);
  const Pt q = pts[n + 1];
  for (auto _ : state) {
    PointId id = ps.insert(q);
    fan.on_point_inserted(id);
    fan.on_point_deleted(id, q);
    ps.erase(id);
    benchmark::DoNotOptimize(fan.min_depth());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(FanUpdate)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity();

static void FanRebuild(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n + 1, 11, false);
  PointSet ps(false, Validation::Fast);
  PointId anchor = ps.insert(pts[0]);
  for (std::size_t i = 1; i <= n; ++i) ps.insert(pts[i]);
  for (auto _ : state) {
    AnchorFan fan = AnchorFan::build(ps, anchor);
    benchmark::DoNotOptimize(fan.min_depth());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(FanRebuild)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

static void RankUpdate(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n + 1, 13, false);
  RankEngine e(Validation::Fast, true);
  for (std::size_t i = 0; i < n; ++i) e.insert(pts[i]);
  const Pt q = pts[n];
  for (auto _ : state) {
    PointId id = e.insert(q);
    e.erase(id);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(RankUpdate)->RangeMultiplier(2)->Range(1 << 7, 1 << 10)->Complexity();

static void RankContourReport(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto pts = bench::gen_points(n, 17, false);
  RankEngine e(Validation::Fast, true);
  for (const Pt& p : pts) e.insert(p);
  int m = static_cast<int>(n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.rank_contour(m));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(RankContourReport)->RangeMultiplier(2)->Range(1 << 7, 1 << 10)->Complexity();

BENCHMARK_MAIN();
