#pragma once

#include <cstdint>
#include <string>

#include "depthcore/rational.hpp"

namespace dd {

using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = 0xffffffffu;

struct Pt {
  Rat x, y;
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

// Unnormalized direction vector; (0,0) is not a valid direction.
struct Dir {
  Rat x, y;
  bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
  friend bool operator==(const Dir& a, const Dir& b);  // equality as rays, see cmp_angle
};

inline Dir antipode(const Dir& d) { return Dir{-d.x, -d.y}; }
inline Dir dir_between(const Pt& from, const Pt& to) { return Dir{to.x - from.x, to.y - from.y}; }

// Sign of the cross product u x v.
int cross_sign(const Dir& u, const Dir& v);

// Sign of the dot product.
int dot_sign(const Dir& u, const Dir& v);

// Orientation of the triple (a, b, c): +1 counter-clockwise, 0 collinear,
// -1 clockwise. Exact.
int orient(const Pt& a, const Pt& b, const Pt& c);

// Total order on directions by counter-clockwise angle in [0, 2pi) measured
// from the positive x-axis. Exact: octant class first, cross product inside a
// class. Returns <0, 0, >0. Two directions compare equal iff one is a positive
// multiple of the other.
int cmp_angle(const Dir& u, const Dir& v);

inline bool same_ray(const Dir& u, const Dir& v) { return cmp_angle(u, v) == 0; }
inline bool operator==(const Dir& a, const Dir& b) { return same_ray(a, b); }

// Compares the CCW angular offsets of u and v measured from `base`, i.e.
// orders directions by angle in [0, 2pi) starting at `base`. Returns <0,0,>0.
int cmp_angle_from(const Dir& base, const Dir& u, const Dir& v);

// CCW angular offset class of x from base: 0 = same ray, 1 = offset in (0,pi),
// 2 = exactly pi (opposite ray), 3 = offset in (pi, 2pi).
int offset_class(const Dir& base, const Dir& x);

// Membership of x in the CCW interval from a to b; end inclusion selectable.
// If a and b are the same ray the interval is that single ray (when either
// end is inclusive) or empty.
bool in_ccw_interval(const Dir& a, const Dir& b, const Dir& x, bool incl_a, bool incl_b);

// A line y = slope*x + intercept (never vertical in the dual setting).
struct DualLine {
  Rat slope, intercept;
  Rat y_at(const Rat& x) const { return slope * x + intercept; }
  friend bool operator==(const DualLine& a, const DualLine& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

// Point-line duality: p = (a, b) maps to the line y = a*x - b and back.
// Order preserving: p above l iff dual(p) below dual(l), same vertical gap.
inline DualLine dual_of_point(const Pt& p) { return DualLine{p.x, -p.y}; }
inline Pt dual_of_line(const DualLine& l) { return Pt{l.slope, -l.intercept}; }

// Intersection of two non-parallel lines.
Pt line_intersection(const DualLine& a, const DualLine& b);

std::string pt_str(const Pt& p);

}  // namespace dd
