#include <doctest.h>

#include <cmath>
#include <random>

#include "depthcore/geometry.hpp"

using namespace dd;

TEST_CASE("rational parsing is exact") {
  CHECK(Rat::parse("1.25") == Rat(5, 4));
  CHECK(Rat::parse("5/4") == Rat(5, 4));
  CHECK(Rat::parse("-7/4") == Rat(-7, 4));
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("+.5") == Rat(1, 2));
  CHECK(Rat::parse("-0.1") == Rat(-1, 10));
  CHECK(!Rat::parse(""));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse("1.2.3"));
  CHECK(!Rat::parse("abc"));
  CHECK(!Rat::parse("1e3"));
  CHECK(Rat::parse("0.30000000000000004") != Rat(3, 10));
}

TEST_CASE("rational canonical text") {
  CHECK(Rat(4, 8).str() == "1/2");
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(8, 4).str() == "2");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("orient basics") {
  Pt a{0, 0}, b{1, 0}, c{0, 1}, d{2, 0};
  CHECK(orient(a, b, c) == 1);
  CHECK(orient(a, b, d) == 0);
  CHECK(orient(a, c, b) == -1);
}

TEST_CASE("orient is antisymmetric under swaps") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int it = 0; it < 500; ++it) {
    Pt a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    CHECK(orient(a, b, c) == -orient(a, c, b));
    CHECK(orient(a, b, c) == -orient(b, a, c));
    CHECK(orient(a, b, c) == orient(b, c, a));
  }
}

TEST_CASE("cmp_angle basics") {
  CHECK(cmp_angle(Dir{1, 0}, Dir{0, 1}) < 0);
  CHECK(cmp_angle(Dir{-1, 0}, Dir{0, -1}) < 0);
  CHECK(cmp_angle(Dir{2, 2}, Dir{1, 1}) == 0);
  CHECK(cmp_angle(Dir{1, 1}, Dir{-1, -1}) < 0);
  CHECK(cmp_angle(Dir{1, 0}, Dir{1, 0}) == 0);
}

TEST_CASE("cmp_angle agrees with atan2 away from ties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-1000, 1000);
  auto ang = [](const Dir& v) {
    double a = std::atan2(v.y.to_double(), v.x.to_double());
    if (a < 0) a += 2 * 3.141592653589793238;
    return a;
  };
  for (int it = 0; it < 2000; ++it) {
    Dir u{d(rng), d(rng)}, v{d(rng), d(rng)};
    if (u.is_zero() || v.is_zero()) continue;
    double au = ang(u), av = ang(v);
    if (std::abs(au - av) < 1e-9) continue;
    CHECK((cmp_angle(u, v) < 0) == (au < av));
  }
}

TEST_CASE("cmp_angle is a strict weak ordering (transitivity spot check)") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int it = 0; it < 2000; ++it) {
    Dir a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    if (cmp_angle(a, b) < 0 && cmp_angle(b, c) < 0) CHECK(cmp_angle(a, c) < 0);
    if (cmp_angle(a, b) == 0 && cmp_angle(b, c) == 0) CHECK(cmp_angle(a, c) == 0);
  }
}

TEST_CASE("antipode") {
  CHECK(antipode(Dir{1, 0}) == Dir{-1, 0});
  CHECK(antipode(Dir{0, -3}) == Dir{0, 3});
  Dir u{5, 7};
  CHECK(antipode(antipode(u)) == u);
  CHECK(cmp_angle(antipode(Dir{2, 0}), Dir{-5, 0}) == 0);
}

TEST_CASE("dual transform") {
  Pt p{2, 3};
  DualLine l = dual_of_point(p);
  CHECK(l.slope == Rat(2));
  CHECK(l.intercept == Rat(-3));
  CHECK(dual_of_line(l) == p);
  CHECK(dual_of_point(Pt{0, 0}).slope == Rat(0));
  CHECK(dual_of_point(Pt{0, 0}).intercept == Rat(0));
}

TEST_CASE("dual transform preserves order with equal vertical distance") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int it = 0; it < 1000; ++it) {
    Pt p{d(rng), d(rng)};
    DualLine l{Rat(d(rng)), Rat(d(rng))};
    Rat primal_gap = p.y - l.y_at(p.x);  // >0 iff p above l
    DualLine pd = dual_of_point(p);
    Pt ld = dual_of_line(l);
    Rat dual_gap = ld.y - pd.y_at(ld.x);  // >0 iff dual(l) above dual(p)
    CHECK(primal_gap == dual_gap);
  }
}

TEST_CASE("ccw interval membership") {
  Dir e{1, 0}, n{0, 1}, w{-1, 0}, s{0, -1};
  CHECK(in_ccw_interval(n, s, w, true, true));
  CHECK(in_ccw_interval(n, s, n, true, true));
  CHECK(!in_ccw_interval(n, s, n, false, true));
  CHECK(!in_ccw_interval(n, s, e, true, true));
  // wrap through the seam
  CHECK(in_ccw_interval(s, n, e, true, true));
  CHECK(!in_ccw_interval(s, n, w, true, true));
  CHECK(offset_class(e, n) == 1);
  CHECK(offset_class(e, w) == 2);
  CHECK(offset_class(e, s) == 3);
  CHECK(offset_class(e, Dir{3, 0}) == 0);
}
