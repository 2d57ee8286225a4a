#include "depthcore/bench_harness.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "depthcore/anchor_fan.hpp"
#include "depthcore/cover_engine.hpp"
#include "depthcore/rank_engine.hpp"

namespace dd::bench {

namespace {

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

std::vector<Pt> gen_points(std::size_t n, std::uint64_t seed, bool distinct_x) {
  std::mt19937_64 rng(seed);
  // Coordinates stay small enough that crossing coordinates and their
  // orientation products fit a couple of limbs.
  std::uniform_int_distribution<long long> d(-(1ll << 20), 1ll << 20);
  std::set<long long> xs;
  std::set<std::pair<long long, long long>> seen;
  std::vector<Pt> out;
  out.reserve(n);
  while (out.size() < n) {
    long long x = d(rng), y = d(rng);
    if (distinct_x && !xs.insert(x).second) continue;
    if (!seen.insert({x, y}).second) continue;
    out.push_back(Pt{Rat(x), Rat(y)});
  }
  return out;
}

Row run_fan(std::size_t n, std::uint64_t seed, int reps) {
  auto pts = gen_points(n + static_cast<std::size_t>(reps) + 1, seed, false);
  PointSet ps(false, Validation::Fast);
  PointId anchor = ps.insert(pts[0]);
  for (std::size_t i = 1; i <= n; ++i) ps.insert(pts[i]);
  AnchorFan fan = AnchorFan::build(ps, anchor);

  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) {
    Pt q = pts[n + 1 + static_cast<std::size_t>(r)];
    PointId id = ps.insert(q);
    fan.on_point_inserted(id);
    fan.on_point_deleted(id, q);
    ps.erase(id);
  }
  auto t1 = Clock::now();
  double upd = secs(t0, t1) / (2.0 * reps);

  auto s0 = Clock::now();
  AnchorFan rebuilt = AnchorFan::build(ps, anchor);
  auto s1 = Clock::now();
  (void)rebuilt.min_depth();
  return Row{"fan", n, upd, secs(s0, s1)};
}

Row run_rank(std::size_t n, std::uint64_t seed, int reps) {
  auto pts = gen_points(n + static_cast<std::size_t>(reps) + 1, seed, false);
  RankEngine e(Validation::Fast, /*with_trackers=*/true);
  for (std::size_t i = 0; i < n; ++i) e.insert(pts[i]);

  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) {
    PointId id = e.insert(pts[n + static_cast<std::size_t>(r)]);
    e.erase(id);
  }
  auto t1 = Clock::now();
  double upd = secs(t0, t1) / (2.0 * reps);

  // Static recompute: one fan build per point.
  auto s0 = Clock::now();
  long long acc = 0;
  for (const auto& [id, p] : e.points().points()) {
    AnchorFan f = AnchorFan::build(e.points(), id);
    acc += f.depth_numerator();
  }
  auto s1 = Clock::now();
  (void)acc;
  return Row{"rank", n, upd, secs(s0, s1)};
}

Row run_cover(std::size_t n, std::uint64_t seed, int reps) {
  auto pts = gen_points(n + static_cast<std::size_t>(reps) + 1, seed, true);
  CoverEngine e(Validation::Fast);
  std::vector<Pt> base(pts.begin(), pts.begin() + static_cast<long>(n));
  e.bulk_load(base);

  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) {
    PointId id = e.insert(pts[n + static_cast<std::size_t>(r)]);
    e.erase(id);
  }
  auto t1 = Clock::now();
  double upd = secs(t0, t1) / (2.0 * reps);

  auto s0 = Clock::now();
  CoverEngine rebuilt(Validation::Fast);
  rebuilt.bulk_load(base);
  auto s1 = Clock::now();
  return Row{"cover", n, upd, secs(s0, s1)};
}

std::string to_csv(const std::vector<Row>& rows) {
  std::ostringstream o;
  o << "mode,n,mean_update_seconds,static_recompute_seconds\n";
  o.setf(std::ios::scientific);
  o.precision(6);
  for (const Row& r : rows)
    o << r.mode << ',' << r.n << ',' << r.update_seconds << ',' << r.static_seconds << '\n';
  return o.str();
}

}  // namespace dd::bench
