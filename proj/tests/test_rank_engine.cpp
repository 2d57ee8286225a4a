#include <doctest.h>

#include "depthcore/oracle.hpp"
#include "depthcore/rank_engine.hpp"
#include "util.hpp"

using namespace dd;
using namespace ddtest;

TEST_CASE("bucket layout for a triangle plus interior point") {
  RankEngine e;
  PointId a = e.insert(Pt{0, 0});
  PointId b = e.insert(Pt{12, 0});
  PointId c = e.insert(Pt{0, 12});
  PointId q = e.insert(Pt{3, 3});

  CHECK(e.depth_of(a) == std::make_pair(1, 4));
  CHECK(e.depth_of(b) == std::make_pair(1, 4));
  CHECK(e.depth_of(c) == std::make_pair(1, 4));
  CHECK(e.depth_of(q) == std::make_pair(2, 4));
  REQUIRE(e.buckets().size() >= 3);
  CHECK(e.buckets()[1].size() == 3);
  CHECK(e.buckets()[2].size() == 1);
  CHECK(e.buckets()[2][0] == q);

  e.erase(q);
  CHECK(e.buckets()[1].size() == 3);
  CHECK(e.max_depth_numerator() == 1);
  CHECK(e.depth_of(a) == std::make_pair(1, 3));
}

TEST_CASE("rank contours: whole hull, single deepest, nesting") {
  RankEngine e;
  e.insert(Pt{0, 0});
  e.insert(Pt{12, 0});
  e.insert(Pt{0, 12});
  e.insert(Pt{3, 3});

  Polygon all = e.rank_contour(4);
  CHECK(all == convex_hull({Pt{0, 0}, Pt{12, 0}, Pt{0, 12}}));  // interior point adds no vertex

  Polygon one = e.rank_contour(1);
  CHECK(one.kind == Polygon::Kind::Point);
  CHECK(one.verts[0] == Pt{3, 3});

  CHECK_THROWS_AS(e.rank_contour(0), DepthError);
  CHECK_THROWS_AS(e.rank_contour(5), DepthError);
}

TEST_CASE("randomized bucket agreement with the oracle plus one-step moves") {
  Gen g(2024);
  RankEngine e;
  std::vector<PointId> alive;
  for (int step = 0; step < 140; ++step) {
    std::map<PointId, int> before;
    for (PointId id : alive) before[id] = e.depth_of(id).first;

    bool ins = alive.size() < 4 || (g.rng()() % 100) < 60;
    if (ins && alive.size() < 28) {
      Pt p = g.fresh_pt(e.points());
      alive.push_back(e.insert(p));
    } else {
      std::size_t i = g.rng()() % alive.size();
      e.erase(alive[i]);
      alive.erase(alive.begin() + static_cast<long>(i));
    }

    auto depths = oracle::static_all_depths(e.points());
    for (PointId id : alive) {
      CHECK(e.depth_of(id).first == depths.at(id));
      auto it = before.find(id);
      if (it != before.end()) CHECK(std::abs(e.depth_of(id).first - it->second) <= 1);
    }
    // buckets hold exactly the points of their depth, in stable order
    for (std::size_t b = 0; b < e.buckets().size(); ++b)
      for (PointId id : e.buckets()[b]) CHECK(depths.at(id) == static_cast<int>(b));
  }
}

TEST_CASE("rank contours match oracle hulls under the shared tie order") {
  Gen g(3030);
  RankEngine e;
  for (const Pt& p : g.normal_sample(50)) e.insert(p);
  REQUIRE(e.size() == 50);

  auto depths = oracle::static_all_depths(e.points());
  for (int m = 5; m <= 50; m += 5) {
    auto sel = e.deepest(m);
    REQUIRE(static_cast<int>(sel.size()) == m);
    // the selection respects depth order
    int worst = 1 << 30;
    for (PointId id : sel) worst = std::min(worst, depths.at(id));
    for (const auto& [id, k] : depths) {
      bool selected = std::find(sel.begin(), sel.end(), id) != sel.end();
      if (k > worst) CHECK(selected);
    }
    std::vector<Pt> pts;
    for (PointId id : sel) pts.push_back(e.points().at(id));
    CHECK(e.rank_contour(m) == convex_hull(pts));
  }

  // nesting: hull(m) inside hull(m')
  for (int m = 5; m < 50; m += 5) {
    Polygon inner = e.rank_contour(m);
    Polygon outer = e.rank_contour(m + 5);
    for (const Pt& v : inner.verts) CHECK(polygon_contains(outer, v));
  }
}

TEST_CASE("depth queries reject unknown ids") {
  RankEngine e;
  PointId a = e.insert(Pt{0, 0});
  e.insert(Pt{5, 1});
  e.erase(a);
  CHECK_THROWS_AS(e.depth_of(a), DepthError);
  CHECK_THROWS_AS(e.erase(a), DepthError);
  CHECK_THROWS_AS(e.erase_at(Pt{9, 9}), DepthError);
}
