#pragma once

#include <map>
#include <utility>
#include <vector>

#include "depthcore/contour.hpp"
#include "depthcore/point_set.hpp"

namespace dd::oracle {

// Brute-force references, deliberately independent of the dynamic structures.
// Practical caps: depth oracles are fine to ~256 points, contour/level
// oracles to ~64.

// Half-space depth numerator of a data point. Computed two independent ways
// (angular sweep and a direct scan of all two-point boundary lines) which are
// cross-checked on every call. cross_check=false keeps only the sweep, for
// callers that run the oracle inside per-operation loops; the two routes must
// already have been reconciled by the property tests before that is valid.
int static_depth(const PointSet& ps, PointId p, bool cross_check = true);

std::map<PointId, int> static_all_depths(const PointSet& ps, bool cross_check = true);

// Depth numerator of an arbitrary location (not necessarily a data point).
int depth_of_location(const PointSet& ps, const Pt& x);

// Cover contour of depth k/n as the intersection of all closed half-planes
// that contain exactly n-k+1 data points and have two data points on their
// boundary. n = 1 and n = 2 are the degenerate point/segment cases.
Polygon static_cover_contour(const PointSet& ps, int k);

struct OracleDefPair {
  bool degenerate = true;
  Dir v1{}, v2{};          // canonical order: ccw(v1 -> v2) in (pi, 2pi)
  PointId partner1 = kNoPoint, partner2 = kNoPoint;
  bool to1 = false, to2 = false;
};

// Defining pair by full scan of the meaningful half-planes.
OracleDefPair static_defining_pair(const PointSet& ps, PointId p);

struct LevelOracle {
  // Vertex ids are the (smaller, larger) point-id pair of the crossing lines.
  std::vector<Pt> verts;  // strictly increasing x
  std::vector<std::pair<PointId, PointId>> vert_ids;
  PointId left_line = kNoPoint, right_line = kNoPoint;
};

// All levels of the dual-line arrangement, index 0 holding level 1.
std::vector<LevelOracle> static_levels(const PointSet& ps);

}  // namespace dd::oracle
