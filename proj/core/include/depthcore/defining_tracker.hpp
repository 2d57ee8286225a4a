#pragma once

#include <optional>

#include "depthcore/anchor_fan.hpp"

namespace dd {

// Position of a query point relative to the two defining lines of an anchor.
// R1 = outside both defining half-planes, R2 = inside the first only,
// R3 = inside the second only, R4 = inside both. The on-line values apply to
// deletions of a defining partner (inserting onto a line would violate
// general position): toward means the deleted point lay in the direction of
// the incident contour edge, away means the opposite side.
enum class Region { R1, R2, R3, R4, OnLineTowardEdge, OnLineAwayFromEdge };

// One defining half-plane: the fan vector whose closed right half-plane
// contains exactly depth_numerator()+1 data points and whose boundary line
// carries a contour edge at the anchor.
struct DefSide {
  FanKey key;
  Dir dir;
};

// Maintains the anchor's two defining half-planes across updates using the
// insertion/deletion case analysis, plus the degenerate-contour transitions.
// The bound fan must already reflect the new point set when after_insert or
// after_delete runs.
class DefiningTracker {
 public:
  DefiningTracker(const PointSet& ps, const AnchorFan& fan) : ps_(&ps), fan_(&fan) {
    reset_from_fan();
  }

  bool degenerate() const { return !pair_.has_value(); }
  const DefSide& l1() const;
  const DefSide& l2() const;

  Region classify(const Pt& q) const;  // throws DegeneratePair
  // Predicted change of the anchor's depth numerator if q were inserted
  // (inserting=true) or is being deleted: -1, 0, or +1. O(1).
  int depth_change(const Pt& q, bool inserting) const;

  void after_insert(PointId q);
  void after_delete(PointId q, const Pt& q_pos);

  // True iff the anchor lies on a degenerate contour: the witnesses of its
  // depth do not span a closed semicircle. O(log n) probes.
  bool degeneracy_test() const;
  // Rebuilds the pair from the fan; throws StillDegenerate if no valid pair.
  void recover();
  void reset_from_fan();

 private:
  bool try_recover();

 public:

 private:
  const PointSet* ps_;
  const AnchorFan* fan_;
  std::optional<std::pair<DefSide, DefSide>> pair_;

  Dir anchor_dir_to(const Pt& q) const;
  void set_pair(const FanLeaf& a, const FanLeaf& b);
  // Collects the extreme minimum-depth vectors per quarter, CCW order.
  std::vector<FanLeaf> min_depth_extremes() const;
};

}  // namespace dd
