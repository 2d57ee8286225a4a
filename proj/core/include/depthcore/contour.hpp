#pragma once

#include <vector>

#include "depthcore/geometry.hpp"

namespace dd {

// A reported contour. Polygons are strictly convex, CCW, starting at the
// lexicographically smallest vertex; segments store their two endpoints in
// lexicographic order; all coordinates exact.
struct Polygon {
  enum class Kind { Empty, Point, Segment, Poly };
  Kind kind = Kind::Empty;
  std::vector<Pt> verts;

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.kind == b.kind && a.verts == b.verts;
  }
};

bool lex_less(const Pt& a, const Pt& b);

// Strict convex hull (collinear interior points dropped), packaged as a
// canonical Polygon.
Polygon convex_hull(std::vector<Pt> pts);

// Upper/lower hulls of points sorted by lex (x, y); strict turns.
std::vector<Pt> upper_hull(const std::vector<Pt>& sorted);
std::vector<Pt> lower_hull(const std::vector<Pt>& sorted);

// Canonicalizes a CCW vertex list into a Polygon (dedupes, classifies
// point/segment/poly, rotates to the lexicographic minimum).
Polygon canonical_polygon(std::vector<Pt> ccw_verts);

// True if q lies inside or on the region described by the polygon
// (point/segment handled as their degenerate regions).
bool polygon_contains(const Polygon& poly, const Pt& q);

std::string polygon_str(const Polygon& p);

}  // namespace dd
