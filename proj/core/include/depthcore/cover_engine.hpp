#pragma once

#include <map>
#include <vector>

#include "depthcore/contour.hpp"
#include "depthcore/hull_tree.hpp"
#include "depthcore/point_set.hpp"

namespace dd {

// Maintains every level of the dual-line arrangement as a chain with its
// root hulls. Point insertion/deletion stitches the chains along the new or
// removed dual line with O(n) split/join steps; any cover contour reports
// from the stored hulls.
class CoverEngine {
 public:
  explicit CoverEngine(Validation v = Validation::Full)
      : ps_(/*require_distinct_x=*/true, v) {}

  CoverEngine(const CoverEngine&) = delete;
  CoverEngine& operator=(const CoverEngine&) = delete;

  PointId insert(const Pt& q);
  void erase(PointId id);
  void erase_at(const Pt& q);

  // The depth-k/n cover contour, exact. EmptyContour comes back as an empty
  // polygon; k outside 1..ceil(n/2) throws OutOfRange.
  Polygon cover_contour(int k) const;

  // Largest k with a nonempty contour (the plane's maximum depth).
  int max_contour_depth() const;

  std::size_t size() const { return ps_.size(); }
  const PointSet& points() const { return ps_; }
  std::size_t level_count() const { return levels_.size(); }
  const Chain& level(std::size_t l) const { return levels_.at(l - 1); }  // 1-based

  // Builds the whole structure from scratch (used by benchmarks to seed large
  // instances and by tests as the rebuilt reference).
  void bulk_load(const std::vector<Pt>& pts);

 private:
  PointSet ps_;
  std::map<PointId, DualLine> lines_;
  std::vector<Chain> levels_;

  void insert_line(PointId id);
  void remove_line(PointId id);

  struct DownUp {
    std::vector<Pt> verts;  // valid dual vertices, by increasing x
  };
  // Valid hull vertices of the level feeding half-planes into the contour;
  // sign +1 reads the upper hull (downward half-planes), -1 the lower.
  std::vector<Pt> contour_candidates(std::size_t lvl, int sign) const;
};

}  // namespace dd
