#include <doctest.h>

#include "depthcore/cover_engine.hpp"
#include "depthcore/oracle.hpp"
#include "util.hpp"

using namespace dd;
using namespace ddtest;

namespace {

// Master property: every level chain and both root hulls match a from-scratch
// static build of the current point set.
void check_from_scratch(const CoverEngine& e) {
  auto lv = oracle::static_levels(e.points());
  REQUIRE(e.level_count() == lv.size());
  for (std::size_t l = 1; l <= lv.size(); ++l) {
    const Chain& c = e.level(l);
    const auto& want = lv[l - 1];
    CHECK(c.left_line() == want.left_line);
    CHECK(c.right_line() == want.right_line);
    auto vs = c.vertices();
    REQUIRE(vs.size() == want.verts.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      CHECK(std::make_pair(vs[i].a, vs[i].b) == want.vert_ids[i]);
      CHECK(vs[i].pos == want.verts[i]);
    }
    // root hulls vs a scan over the oracle's vertex list
    for (int sign : {+1, -1}) {
      std::vector<const ChainVertex*> ptr;
      std::vector<ChainVertex> own;
      own.reserve(vs.size());
      for (auto& v : vs) own.push_back(v);
      for (auto& v : own) ptr.push_back(&v);
      auto want_h = hull::scan_hull(ptr, sign);
      auto got_h = c.hull(sign);
      REQUIRE(got_h.size() == want_h.size());
      for (std::size_t i = 0; i < got_h.size(); ++i) CHECK(*got_h[i] == *want_h[i]);
    }
  }
}

}  // namespace

TEST_CASE("two line arrangement") {
  CoverEngine e;
  e.insert(Pt{0, 0});
  CHECK(e.level_count() == 1);
  CHECK(e.level(1).empty());
  e.insert(Pt{1, 1});
  REQUIRE(e.level_count() == 2);
  CHECK(e.level(1).size() == 1);
  CHECK(e.level(2).size() == 1);
  check_from_scratch(e);
}

TEST_CASE("insert then delete restores the arrangement") {
  Gen g(11011, 500);
  CoverEngine e;
  std::vector<PointId> ids;
  for (const Pt& p : g.general_position(8, true)) ids.push_back(e.insert(p));
  check_from_scratch(e);
  auto before_levels = e.level_count();

  Pt extra = g.fresh_pt(e.points());
  PointId q = e.insert(extra);
  check_from_scratch(e);
  e.erase(q);
  CHECK(e.level_count() == before_levels);
  check_from_scratch(e);
}

TEST_CASE("randomized from-scratch equality across mixed updates") {
  Gen g(5150, 600);
  CoverEngine e;
  std::vector<PointId> alive;
  for (int step = 0; step < 90; ++step) {
    bool ins = alive.size() < 3 || (g.rng()() % 100) < 60;
    if (ins && alive.size() < 20) {
      Pt p = g.fresh_pt(e.points());
      alive.push_back(e.insert(p));
    } else {
      std::size_t i = g.rng()() % alive.size();
      e.erase(alive[i]);
      alive.erase(alive.begin() + static_cast<long>(i));
    }
    check_from_scratch(e);
  }
}

TEST_CASE("bulk load equals incremental construction") {
  Gen g(616, 400);
  auto pts = g.general_position(14, true);
  CoverEngine inc;
  for (const Pt& p : pts) inc.insert(p);
  CoverEngine bulk;
  bulk.bulk_load(pts);
  check_from_scratch(bulk);
  REQUIRE(inc.level_count() == bulk.level_count());
  for (std::size_t l = 1; l <= inc.level_count(); ++l) {
    auto a = inc.level(l).vertices();
    auto b = bulk.level(l).vertices();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("cover contours: hull case and the two point segment") {
  CoverEngine e;
  e.insert(Pt{0, 0});
  e.insert(Pt{4, 1});
  Polygon seg = e.cover_contour(1);
  CHECK(seg.kind == Polygon::Kind::Segment);
  CHECK(seg.verts[0] == Pt{0, 0});
  CHECK(seg.verts[1] == Pt{4, 1});

  e.insert(Pt{1, 5});
  Polygon hull = e.cover_contour(1);
  CHECK(hull == convex_hull({Pt{0, 0}, Pt{4, 1}, Pt{1, 5}}));
  CHECK(hull == oracle::static_cover_contour(e.points(), 1));
}

TEST_CASE("cover contours equal the half-plane intersection oracle") {
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    Gen g(seed, 300);
    CoverEngine e;
    int n = 6 + static_cast<int>(g.rng()() % 7);  // 6..12
    for (const Pt& p : g.general_position(n, true)) e.insert(p);
    int kmax = (n + 1) / 2;
    for (int k = 1; k <= kmax; ++k) {
      Polygon got = e.cover_contour(k);
      Polygon want = oracle::static_cover_contour(e.points(), k);
      CHECK(got == want);
    }
    CHECK_THROWS_AS(e.cover_contour(0), DepthError);
    CHECK_THROWS_AS(e.cover_contour(kmax + 1), DepthError);
  }
}

TEST_CASE("nestedness across insertions") {
  Gen g(808, 350);
  CoverEngine e;
  for (const Pt& p : g.general_position(8, true)) e.insert(p);
  for (int step = 0; step < 10; ++step) {
    int kmax_old = e.max_contour_depth();
    std::vector<Polygon> old;
    for (int k = 1; k <= kmax_old; ++k) old.push_back(e.cover_contour(k));
    Pt p = g.fresh_pt(e.points());
    e.insert(p);
    for (int k = 1; k <= kmax_old; ++k) {
      Polygon now = e.cover_contour(k);
      REQUIRE(now.kind != Polygon::Kind::Empty);
      for (const Pt& v : old[static_cast<std::size_t>(k - 1)].verts)
        CHECK(polygon_contains(now, v));
    }
  }
}

TEST_CASE("level partition and adjacent-segment law") {
  Gen g(99, 200);
  CoverEngine e;
  for (const Pt& p : g.general_position(10, true)) e.insert(p);
  std::size_t n = e.size();
  std::size_t total = 0;
  std::map<std::pair<PointId, PointId>, int> seen;
  for (std::size_t l = 1; l <= n; ++l) {
    auto vs = e.level(l).vertices();
    total += vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      seen[{vs[i].a, vs[i].b}] += 1;
      if (i) CHECK(vs[i - 1].pos.x < vs[i].pos.x);
    }
  }
  CHECK(total == n * (n - 1));            // every crossing appears on two levels
  for (auto& [ids, cnt] : seen) CHECK(cnt == 2);
}
