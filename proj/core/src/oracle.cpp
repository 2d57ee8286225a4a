#include "depthcore/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "depthcore/errors.hpp"

namespace dd::oracle {

namespace {

struct Event {
  Dir dir;
  bool arrival;  // true: a point enters the half-plane here; false: it leaves after
};

// Closed half-plane right of v, boundary through `from`.
bool in_right_half(const Dir& v, const Pt& from, const Pt& p) {
  return cross_sign(v, dir_between(from, p)) <= 0;
}

int depth_by_line_scan(const PointSet& ps, PointId pid) {
  const Pt& p = ps.at(pid);
  int best = -1;
  for (const auto& [rid, r] : ps.points()) {
    if (rid == pid) continue;
    for (Dir v : {dir_between(p, r), dir_between(r, p)}) {
      int cnt = 1;  // the anchor
      for (const auto& [sid, s] : ps.points()) {
        if (sid == pid) continue;
        if (in_right_half(v, p, s)) ++cnt;
      }
      if (best < 0 || cnt < best) best = cnt;
    }
  }
  assert(best > 0);
  return best - 1;
}

int depth_by_sweep(const PointSet& ps, PointId pid) {
  const Pt& p = ps.at(pid);
  std::vector<Event> ev;
  ev.reserve(2 * (ps.size() - 1));
  for (const auto& [rid, r] : ps.points()) {
    if (rid == pid) continue;
    Dir d = dir_between(p, r);
    ev.push_back({d, true});
    ev.push_back({antipode(d), false});
  }
  if (ev.empty()) return 0;
  std::sort(ev.begin(), ev.end(),
            [](const Event& a, const Event& b) { return cmp_angle(a.dir, b.dir) < 0; });
  // Count for the half-plane at the first event direction, directly.
  int cnt = 1;
  for (const auto& [rid, r] : ps.points()) {
    if (rid == pid) continue;
    if (in_right_half(ev[0].dir, p, r)) ++cnt;
  }
  int mn = cnt;
  for (std::size_t i = 1; i < ev.size(); ++i) {
    if (!ev[i - 1].arrival) --cnt;  // the point of an away vector leaves just past it
    if (ev[i].arrival) ++cnt;
    mn = std::min(mn, cnt);
  }
  return mn - 1;
}

}  // namespace

int static_depth(const PointSet& ps, PointId p, bool cross_check) {
  if (!ps.contains(p)) throw DepthError(Errc::UnknownPoint, "static_depth: unknown id", p);
  if (ps.size() == 1) return 1;
  int a = depth_by_sweep(ps, p);
  if (cross_check) {
    int b = depth_by_line_scan(ps, p);
    assert(a == b);
    if (a != b) throw DepthError(Errc::SearchExhausted, "oracle cross-check failed");
  }
  return a;
}

std::map<PointId, int> static_all_depths(const PointSet& ps, bool cross_check) {
  std::map<PointId, int> out;
  for (const auto& [id, p] : ps.points()) out[id] = static_depth(ps, id, cross_check);
  return out;
}

int depth_of_location(const PointSet& ps, const Pt& x) {
  // Group events by direction (an arbitrary location may see collinear data
  // points); track counts both at each event direction and on the open arcs
  // between them.
  int self = ps.find(x) ? 1 : 0;
  struct G {
    Dir dir;
    int arrivals = 0, departures = 0;
  };
  std::vector<std::pair<Dir, bool>> raw;
  for (const auto& [id, r] : ps.points()) {
    if (r == x) continue;
    Dir d = dir_between(x, r);
    raw.push_back({d, true});
    raw.push_back({antipode(d), false});
  }
  if (raw.empty()) return self;
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return cmp_angle(a.first, b.first) < 0; });
  std::vector<G> gs;
  for (auto& [d, arr] : raw) {
    if (gs.empty() || cmp_angle(gs.back().dir, d) != 0) gs.push_back(G{d, 0, 0});
    if (arr)
      ++gs.back().arrivals;
    else
      ++gs.back().departures;
  }
  // Count at group 0, directly (closed half right of its direction).
  int at0 = self;
  for (const auto& [id, r] : ps.points()) {
    if (r == x) continue;
    if (cross_sign(gs[0].dir, dir_between(x, r)) <= 0) ++at0;
  }
  int mn = at0;
  int between = at0 - gs[0].departures;
  mn = std::min(mn, between);
  for (std::size_t i = 1; i < gs.size(); ++i) {
    int at = between + gs[i].arrivals;
    between = at - gs[i].departures;
    mn = std::min(mn, std::min(at, between));
  }
  return mn;
}

Polygon static_cover_contour(const PointSet& ps, int k) {
  int n = static_cast<int>(ps.size());
  if (n == 0) throw DepthError(Errc::OutOfRange, "cover contour of empty set");
  int kmax = (n + 1) / 2;
  if (k < 1 || k > kmax) throw DepthError(Errc::OutOfRange, "cover contour depth out of range");
  std::vector<std::pair<PointId, Pt>> v(ps.points().begin(), ps.points().end());
  if (n == 1) return Polygon{Polygon::Kind::Point, {v[0].second}};
  if (n == 2) {
    std::vector<Pt> seg{v[0].second, v[1].second};
    if (lex_less(seg[1], seg[0])) std::swap(seg[0], seg[1]);
    return Polygon{Polygon::Kind::Segment, std::move(seg)};
  }

  // Bounding box large enough to contain the hull strictly.
  Rat M(0);
  for (auto& [id, p] : v) {
    for (const Rat* c : {&p.x, &p.y}) {
      Rat a = c->sign() < 0 ? -*c : *c;
      if (a > M) M = a;
    }
  }
  M = M * Rat(2) + Rat(2);
  std::vector<Pt> poly{Pt{-M, -M}, Pt{M, -M}, Pt{M, M}, Pt{-M, M}};

  int want = n - k + 1;
  for (int i = 0; i < n && !poly.empty(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Pt& a = v[i].second;
      const Pt& b = v[j].second;
      // Closed half-plane right of the directed line a -> b.
      Rat nx = b.y - a.y, ny = a.x - b.x;
      Rat c = nx * a.x + ny * a.y;
      int cnt = 0;
      for (auto& [id, s] : v)
        if (nx * s.x + ny * s.y <= c) ++cnt;
      if (cnt != want) continue;
      // Clip.
      std::vector<Pt> out;
      std::size_t m = poly.size();
      for (std::size_t e = 0; e < m; ++e) {
        const Pt& s0 = poly[e];
        const Pt& s1 = poly[(e + 1) % m];
        Rat f0 = nx * s0.x + ny * s0.y - c;
        Rat f1 = nx * s1.x + ny * s1.y - c;
        bool in0 = f0.sign() <= 0, in1 = f1.sign() <= 0;
        if (in0) out.push_back(s0);
        if (in0 != in1) {
          Rat t = f0 / (f0 - f1);
          out.push_back(Pt{s0.x + t * (s1.x - s0.x), s0.y + t * (s1.y - s0.y)});
        }
      }
      poly = std::move(out);
      if (poly.empty()) break;
    }
    if (poly.empty()) break;
  }
  return canonical_polygon(std::move(poly));
}

OracleDefPair static_defining_pair(const PointSet& ps, PointId pid) {
  if (!ps.contains(pid)) throw DepthError(Errc::UnknownPoint, "unknown anchor", pid);
  OracleDefPair out;
  if (ps.size() <= 2) return out;
  const Pt& p = ps.at(pid);
  struct W {
    Dir dir;
    PointId partner;
    bool to;
    int cnt;
  };
  std::vector<W> all;
  for (const auto& [rid, r] : ps.points()) {
    if (rid == pid) continue;
    for (bool to : {true, false}) {
      Dir d = to ? dir_between(p, r) : dir_between(r, p);
      int cnt = 1;
      for (const auto& [sid, s] : ps.points()) {
        if (sid == pid) continue;
        if (in_right_half(d, p, s)) ++cnt;
      }
      all.push_back({d, rid, to, cnt});
    }
  }
  int mn = all[0].cnt;
  for (auto& w : all) mn = std::min(mn, w.cnt);
  std::vector<W> wit;
  for (auto& w : all)
    if (w.cnt == mn) wit.push_back(w);
  std::sort(wit.begin(), wit.end(),
            [](const W& a, const W& b) { return cmp_angle(a.dir, b.dir) < 0; });
  for (std::size_t i = 0; i < wit.size(); ++i) {
    const W& u = wit[i];
    const W& w = wit[(i + 1) % wit.size()];
    if (wit.size() == 1 || offset_class(u.dir, w.dir) == 3) {
      if (wit.size() == 1) break;  // no proper pair
      out.degenerate = false;
      out.v1 = u.dir;
      out.partner1 = u.partner;
      out.to1 = u.to;
      out.v2 = w.dir;
      out.partner2 = w.partner;
      out.to2 = w.to;
      return out;
    }
  }
  return out;  // witnesses span no open semicircle: degenerate
}

std::vector<LevelOracle> static_levels(const PointSet& ps) {
  std::size_t n = ps.size();
  std::vector<LevelOracle> levels(n);
  if (n == 0) return levels;
  std::vector<std::pair<PointId, DualLine>> ls;
  ls.reserve(n);
  for (const auto& [id, p] : ps.points()) ls.push_back({id, dual_of_point(p)});

  struct V {
    Rat x;
    Pt pt;
    std::pair<PointId, PointId> ids;
  };
  std::vector<std::vector<V>> per_level(n);

  for (std::size_t i = 0; i < n; ++i) {
    const DualLine& li = ls[i].second;
    struct C {
      Rat x;
      std::size_t j;
    };
    std::vector<C> cs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (ls[j].second.slope == li.slope)
        throw DepthError(Errc::SharedXCoordinate, "parallel dual lines", ls[i].first,
                         ls[j].first);
      Pt v = line_intersection(li, ls[j].second);
      cs.push_back({v.x, j});
    }
    std::sort(cs.begin(), cs.end(), [](const C& a, const C& b) { return a.x < b.x; });
    int lev = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && ls[j].second.slope < li.slope) ++lev;
    for (const C& c : cs) {
      const DualLine& lj = ls[c.j].second;
      Pt v = line_intersection(li, lj);
      PointId a = std::min(ls[i].first, ls[c.j].first);
      PointId b = std::max(ls[i].first, ls[c.j].first);
      per_level[static_cast<std::size_t>(lev - 1)].push_back(V{v.x, v, {a, b}});
      lev += (lj.slope < li.slope) ? -1 : +1;
    }
  }

  // Seam lines: level l runs along the line with the l-th smallest slope at
  // -infinity and the l-th largest at +infinity.
  std::vector<std::size_t> by_slope(n);
  for (std::size_t i = 0; i < n; ++i) by_slope[i] = i;
  std::sort(by_slope.begin(), by_slope.end(),
            [&](std::size_t a, std::size_t b) { return ls[a].second.slope < ls[b].second.slope; });

  for (std::size_t l = 0; l < n; ++l) {
    auto& verts = per_level[l];
    std::sort(verts.begin(), verts.end(), [](const V& a, const V& b) { return a.x < b.x; });
    LevelOracle& out = levels[l];
    for (auto& v : verts) {
      out.verts.push_back(v.pt);
      out.vert_ids.push_back(v.ids);
    }
    out.left_line = ls[by_slope[l]].first;
    out.right_line = ls[by_slope[n - 1 - l]].first;
  }
  return levels;
}

}  // namespace dd::oracle
