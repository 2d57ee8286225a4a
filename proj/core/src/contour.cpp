#include "depthcore/contour.hpp"

#include <algorithm>
#include <cassert>

namespace dd {

bool lex_less(const Pt& a, const Pt& b) {
  int c = compare(a.x, b.x);
  if (c != 0) return c < 0;
  return compare(a.y, b.y) < 0;
}

std::vector<Pt> upper_hull(const std::vector<Pt>& s) {
  std::vector<Pt> h;
  for (const Pt& p : s) {
    while (h.size() >= 2 && orient(h[h.size() - 2], h.back(), p) >= 0) h.pop_back();
    h.push_back(p);
  }
  return h;
}

std::vector<Pt> lower_hull(const std::vector<Pt>& s) {
  std::vector<Pt> h;
  for (const Pt& p : s) {
    while (h.size() >= 2 && orient(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  return h;
}

Polygon convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return Polygon{};
  if (pts.size() == 1) return Polygon{Polygon::Kind::Point, {pts[0]}};
  std::vector<Pt> lo = lower_hull(pts), up = upper_hull(pts);
  if (lo.size() == 2 && up.size() == 2) {
    return Polygon{Polygon::Kind::Segment, {pts.front(), pts.back()}};
  }
  // CCW ring: lower chain left to right, then the upper chain interior
  // right to left (shared endpoints skipped).
  std::vector<Pt> out = lo;
  for (int i = static_cast<int>(up.size()) - 2; i >= 1; --i) out.push_back(up[i]);
  return canonical_polygon(std::move(out));
}

Polygon canonical_polygon(std::vector<Pt> v) {
  // Remove consecutive duplicates (cyclically).
  std::vector<Pt> w;
  for (const Pt& p : v)
    if (w.empty() || !(w.back() == p)) w.push_back(p);
  while (w.size() > 1 && w.front() == w.back()) w.pop_back();
  if (w.empty()) return Polygon{};
  if (w.size() == 1) return Polygon{Polygon::Kind::Point, {w[0]}};
  if (w.size() == 2) {
    if (lex_less(w[1], w[0])) std::swap(w[0], w[1]);
    return Polygon{Polygon::Kind::Segment, std::move(w)};
  }
  // Drop collinear chain vertices (cyclically).
  std::vector<Pt> u;
  std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Pt& prev = w[(i + m - 1) % m];
    const Pt& next = w[(i + 1) % m];
    if (orient(prev, w[i], next) != 0) u.push_back(w[i]);
  }
  if (u.size() == 1) return Polygon{Polygon::Kind::Point, {u[0]}};
  if (u.size() == 2) {
    // Collinear ring collapses to its extreme pair.
    std::vector<Pt> ext = w;
    std::sort(ext.begin(), ext.end(), lex_less);
    return Polygon{Polygon::Kind::Segment, {ext.front(), ext.back()}};
  }
  if (u.empty()) {
    std::vector<Pt> ext = w;
    std::sort(ext.begin(), ext.end(), lex_less);
    return Polygon{Polygon::Kind::Segment, {ext.front(), ext.back()}};
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < u.size(); ++i)
    if (lex_less(u[i], u[start])) start = i;
  std::rotate(u.begin(), u.begin() + static_cast<long>(start), u.end());
  return Polygon{Polygon::Kind::Poly, std::move(u)};
}

bool polygon_contains(const Polygon& poly, const Pt& q) {
  switch (poly.kind) {
    case Polygon::Kind::Empty:
      return false;
    case Polygon::Kind::Point:
      return poly.verts[0] == q;
    case Polygon::Kind::Segment: {
      const Pt& a = poly.verts[0];
      const Pt& b = poly.verts[1];
      if (orient(a, b, q) != 0) return false;
      return compare((q.x - a.x) * (q.x - b.x) + (q.y - a.y) * (q.y - b.y), Rat(0)) <= 0;
    }
    case Polygon::Kind::Poly: {
      std::size_t m = poly.verts.size();
      for (std::size_t i = 0; i < m; ++i)
        if (orient(poly.verts[i], poly.verts[(i + 1) % m], q) < 0) return false;
      return true;
    }
  }
  return false;
}

std::string polygon_str(const Polygon& p) {
  std::string s;
  switch (p.kind) {
    case Polygon::Kind::Empty: return "empty";
    case Polygon::Kind::Point: s = "point"; break;
    case Polygon::Kind::Segment: s = "segment"; break;
    case Polygon::Kind::Poly: s = "polygon"; break;
  }
  for (const Pt& v : p.verts) s += " " + pt_str(v);
  return s;
}

}  // namespace dd
