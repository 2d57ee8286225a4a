#include <doctest.h>

#include <sstream>

#include "depthcore/io.hpp"
#include "depthcore/oracle.hpp"
#include "util.hpp"

using namespace dd;
using namespace ddtest;

TEST_CASE("point file parsing") {
  std::istringstream in(
      "# header comment\n"
      "1.25 -3\n"
      "5/4 7/2   # trailing comment\n"
      "\n"
      "-2 0.5\n");
  auto pts = io::read_points(in);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Pt{Rat(5, 4), Rat(-3)});
  CHECK(pts[1] == Pt{Rat(5, 4), Rat(7, 2)});
  CHECK(pts[2] == Pt{Rat(-2), Rat(1, 2)});

  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(io::read_points(bad), DepthError);
  std::istringstream bad2("1 x\n");
  CHECK_THROWS_AS(io::read_points(bad2), DepthError);
}

TEST_CASE("shear is the documented affine map") {
  Pt p{Rat(3), Rat(4)};
  Pt q = io::shear(p, Rat(1, 2));
  CHECK(q == Pt{Rat(5), Rat(4)});
}

TEST_CASE("rank dump round-trips the exact state") {
  Gen g(777123);
  RankEngine e;
  std::vector<PointId> alive;
  for (int step = 0; step < 40; ++step) {
    bool ins = alive.size() < 4 || (g.rng()() % 100) < 65;
    if (ins) {
      alive.push_back(e.insert(g.fresh_pt(e.points())));
    } else {
      std::size_t i = g.rng()() % alive.size();
      e.erase(alive[i]);
      alive.erase(alive.begin() + static_cast<long>(i));
    }
  }
  std::string d1 = io::dump_rank(e);
  RankEngine r;
  io::load_rank(r, d1);
  std::string d2 = io::dump_rank(r);
  CHECK(d1 == d2);  // byte-identical round trip

  // and the rebuilt engine answers queries identically
  REQUIRE(r.size() == e.size());
  auto ea = e.buckets();
  auto ra = r.buckets();
  REQUIRE(ea.size() == ra.size());
  for (std::size_t b = 0; b < ea.size(); ++b) CHECK(ea[b].size() == ra[b].size());
  for (int m = 1; m <= static_cast<int>(e.size()); ++m)
    CHECK(e.rank_contour(m) == r.rank_contour(m));
}
