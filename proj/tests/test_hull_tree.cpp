#include <doctest.h>

#include <memory>
#include <random>
#include <set>

#include "depthcore/hull_tree.hpp"

using namespace dd;

namespace {

// Fabricated vertices with unique id pairs (so treap priorities differ).
struct VertexPool {
  std::vector<std::unique_ptr<ChainVertex>> store;
  PointId next = 1;
  const ChainVertex* make(long long x, long long y) {
    auto v = std::make_unique<ChainVertex>();
    v->a = next;
    v->b = next + 1;
    next += 2;
    v->pos = Pt{Rat(x), Rat(y)};
    store.push_back(std::move(v));
    return store.back().get();
  }
};

HullNode* build_hull_tree(const std::vector<const ChainVertex*>& hull) {
  HullNode* t = nullptr;
  for (const ChainVertex* v : hull) {
    std::uint64_t pri =
        (static_cast<std::uint64_t>(v->a) * 0x9e3779b97f4a7c15ull) ^ (v->b * 0x7f4a7c15ull);
    t = hull::merge(t, new HullNode(v, pri));
  }
  return t;
}

std::vector<const ChainVertex*> random_pointset(VertexPool& pool, std::mt19937_64& rng,
                                                int n, long long x0, long long x1,
                                                long long yr) {
  std::vector<long long> xs;
  std::uniform_int_distribution<long long> dx(x0, x1), dy(-yr, yr);
  std::set<long long> seen;
  while (static_cast<int>(xs.size()) < n) {
    long long x = dx(rng);
    if (seen.insert(x).second) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<const ChainVertex*> out;
  for (long long x : xs) out.push_back(pool.make(x, dy(rng)));
  return out;
}

}  // namespace

TEST_CASE("bridge matches the scan-hull seam on random hull pairs") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int it = 0; it < 1500; ++it) {
    VertexPool pool;
    int na = 1 + static_cast<int>(rng() % 18);
    int nb = 1 + static_cast<int>(rng() % 18);
    // Small coordinate ranges on purpose: plenty of collinear configurations.
    long long yr = 1 + static_cast<long long>(rng() % 12);
    auto pa = random_pointset(pool, rng, na, 0, 60, yr);
    auto pb = random_pointset(pool, rng, nb, 100, 160, yr);
    for (int sign : {+1, -1}) {
      auto ha = hull::scan_hull(pa, sign);
      auto hb = hull::scan_hull(pb, sign);
      HullNode* A = build_hull_tree(ha);
      HullNode* B = build_hull_tree(hb);
      auto [bi, bj] = hull::find_bridge(A, B, sign);

      std::vector<const ChainVertex*> all = ha;
      all.insert(all.end(), hb.begin(), hb.end());
      auto merged = hull::scan_hull(all, sign);
      const ChainVertex* want_i = nullptr;
      const ChainVertex* want_j = nullptr;
      for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (compare(merged[i]->pos.x, ha.back()->pos.x) <= 0 &&
            compare(merged[i + 1]->pos.x, hb.front()->pos.x) >= 0) {
          want_i = merged[i];
          want_j = merged[i + 1];
        }
      }
      REQUIRE(want_i != nullptr);
      CHECK(bi == want_i);
      CHECK(bj == want_j);
      ++checked;
      hull::free_tree(A);
      hull::free_tree(B);
    }
  }
  CHECK(checked == 3000);
  // The logarithmic descent should handle everything above on its own.
  CHECK(hull::bridge_fallback_count() == 0);
}

namespace {

std::vector<ChainVertex> random_chain_vertices(std::mt19937_64& rng, int n, long long yr) {
  std::set<long long> seen;
  std::vector<long long> xs;
  std::uniform_int_distribution<long long> dx(-1000, 1000), dy(-yr, yr);
  while (static_cast<int>(xs.size()) < n) {
    long long x = dx(rng);
    if (seen.insert(x).second) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<ChainVertex> out;
  PointId id = 1;
  for (long long x : xs) {
    ChainVertex v;
    v.a = id;
    v.b = id + 1;
    id += 2;
    v.pos = Pt{Rat(x), Rat(dy(rng))};
    out.push_back(v);
  }
  return out;
}

void check_chain_hulls(const Chain& c) {
  auto vs = c.vertices();
  for (int sign : {+1, -1}) {
    auto got = c.hull(sign);
    std::vector<const ChainVertex*> ptr;
    ptr.reserve(vs.size());
    for (const auto& v : vs) ptr.push_back(&v);
    auto want = hull::scan_hull(ptr, sign);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(*got[i] == *want[i]);
  }
}

}  // namespace

TEST_CASE("chain construction keeps root hulls equal to scan hulls") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng() % 40);
    auto vs = random_chain_vertices(rng, n, 1 + static_cast<long long>(rng() % 30));
    Chain c = Chain::from_sorted(vs, 500, 501);
    CHECK(c.size() == vs.size());
    check_chain_hulls(c);
  }
}

TEST_CASE("split and join preserve vertices and hulls") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 80; ++it) {
    int n = 2 + static_cast<int>(rng() % 32);
    auto vs = random_chain_vertices(rng, n, 20);
    // Adjacent vertices share a line id, like a real level: vertex i carries
    // the pair (i, i+1), so the piece between i and i+1 is line i+1.
    for (std::size_t i = 0; i < vs.size(); ++i) {
      vs[i].a = static_cast<PointId>(i);
      vs[i].b = static_cast<PointId>(i + 1);
    }
    Chain d = Chain::from_sorted(vs, 0, static_cast<PointId>(vs.size()));

    std::size_t cut = 1 + rng() % (vs.size() - 1);
    Rat x = (vs[cut - 1].pos.x + vs[cut].pos.x) / Rat(2);
    auto [l, r] = Chain::split_at(std::move(d), x);
    CHECK(l.size() == cut);
    CHECK(r.size() == vs.size() - cut);
    CHECK(l.right_line() == static_cast<PointId>(cut));
    CHECK(r.left_line() == static_cast<PointId>(cut));
    check_chain_hulls(l);
    check_chain_hulls(r);

    Chain back = Chain::join(std::move(l), std::move(r));
    CHECK(back.size() == vs.size());
    auto after = back.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) CHECK(after[i] == vs[i]);
    check_chain_hulls(back);
  }
}

TEST_CASE("dropping a vertex splits around it") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    int n = 3 + static_cast<int>(rng() % 20);
    auto vs = random_chain_vertices(rng, n, 15);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      vs[i].a = static_cast<PointId>(i);
      vs[i].b = static_cast<PointId>(i + 1);
    }
    Chain c = Chain::from_sorted(vs, 0, static_cast<PointId>(vs.size()));
    std::size_t at = rng() % vs.size();
    auto [l, r] = Chain::split_dropping_vertex(std::move(c), vs[at].pos.x);
    CHECK(l.size() == at);
    CHECK(r.size() == vs.size() - at - 1);
    CHECK(l.right_line() == static_cast<PointId>(at));
    CHECK(r.left_line() == static_cast<PointId>(at + 1));
    check_chain_hulls(l);
    check_chain_hulls(r);
  }
}

TEST_CASE("pred succ and piece queries") {
  std::vector<ChainVertex> vs;
  for (int i = 0; i < 5; ++i) {
    ChainVertex v;
    v.a = static_cast<PointId>(i);
    v.b = static_cast<PointId>(i + 1);
    v.pos = Pt{Rat(10 * i), Rat(i % 2)};
    vs.push_back(v);
  }
  Chain c = Chain::from_sorted(vs, 0, 5);
  CHECK(!c.pred(Rat(0)).has_value());
  CHECK(c.pred(Rat(1))->pos.x == Rat(0));
  CHECK(c.succ(Rat(35))->pos.x == Rat(40));
  CHECK(!c.succ(Rat(40)).has_value());
  CHECK(c.vertex_at(Rat(20)).has_value());
  CHECK(!c.vertex_at(Rat(21)).has_value());
  CHECK(c.line_at(Rat(15)) == 2);  // piece between vertices 1 and 2
  CHECK(c.line_at(Rat(-5)) == 0);  // left ray
  CHECK(c.line_at(Rat(99)) == 5);  // right ray
}
