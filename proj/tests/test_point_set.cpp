#include <doctest.h>

#include "depthcore/point_set.hpp"

using namespace dd;

TEST_CASE("validate_insert reports the offending configuration") {
  PointSet ps;
  ps.insert(Pt{0, 0});
  ps.insert(Pt{4, 0});

  auto v = ps.check_insert(Pt{2, 0});
  REQUIRE(v.has_value());
  CHECK(v->kind == Errc::CollinearTriple);

  auto d = ps.check_insert(Pt{0, 0});
  REQUIRE(d.has_value());
  CHECK(d->kind == Errc::DuplicatePoint);

  CHECK(!ps.check_insert(Pt{1, 3}).has_value());
  CHECK_THROWS_AS(ps.insert(Pt{2, 0}), DepthError);
}

TEST_CASE("duplicate check on a single point set") {
  PointSet ps;
  ps.insert(Pt{0, 0});
  auto v = ps.check_insert(Pt{0, 0});
  REQUIRE(v.has_value());
  CHECK(v->kind == Errc::DuplicatePoint);
}

TEST_CASE("cover mode rejects shared x coordinates") {
  PointSet ps(/*require_distinct_x=*/true);
  ps.insert(Pt{0, 0});
  ps.insert(Pt{1, 5});
  auto v = ps.check_insert(Pt{1, -2});
  REQUIRE(v.has_value());
  CHECK(v->kind == Errc::SharedXCoordinate);
  // rank mode accepts the same point
  PointSet ps2(false);
  ps2.insert(Pt{0, 0});
  ps2.insert(Pt{1, 5});
  CHECK(!ps2.check_insert(Pt{1, -2}).has_value());
}

TEST_CASE("ids are never reused") {
  PointSet ps;
  PointId a = ps.insert(Pt{0, 0});
  PointId b = ps.insert(Pt{1, 3});
  ps.erase(a);
  PointId c = ps.insert(Pt{2, 7});
  CHECK(c != a);
  CHECK(c != b);
  CHECK(ps.find(Pt{2, 7}) == c);
  CHECK(!ps.find(Pt{0, 0}).has_value());
  CHECK_THROWS_AS(ps.erase(a), DepthError);
}

TEST_CASE("fast validation skips the collinear scan") {
  PointSet ps(false, Validation::Fast);
  ps.insert(Pt{0, 0});
  ps.insert(Pt{4, 0});
  CHECK(!ps.check_insert(Pt{2, 0}).has_value());  // collinear slips through by design
  auto d = ps.check_insert(Pt{4, 0});
  REQUIRE(d.has_value());
  CHECK(d->kind == Errc::DuplicatePoint);
}
