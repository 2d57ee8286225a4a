#pragma once

#include <map>
#include <optional>
#include <vector>

#include "depthcore/contour.hpp"
#include "depthcore/defining_tracker.hpp"

namespace dd {

// Maintains one anchor fan (optionally with its defining tracker) per data
// point, a bucket per depth numerator, and an x-sorted index. Updates are
// O(n log n); rank contours report in O(n). Total space is quadratic (n fans
// of 2(n-1) vectors), so a one-shot warning fires past `space_warn_above`.
class RankEngine {
 public:
  explicit RankEngine(Validation v = Validation::Full, bool with_trackers = true,
                      std::size_t space_warn_above = 8192)
      : ps_(false, v), with_trackers_(with_trackers), warn_above_(space_warn_above) {}

  RankEngine(const RankEngine&) = delete;
  RankEngine& operator=(const RankEngine&) = delete;

  PointId insert(const Pt& q);
  void erase(PointId id);
  void erase_at(const Pt& q);

  // O(1) through the bucket back-reference. Returns (numerator, n).
  std::pair<int, int> depth_of(PointId id) const;

  // Convex hull of the m deepest points (ties by the buckets' stored order).
  Polygon rank_contour(int m) const;

  std::size_t size() const { return ps_.size(); }
  const PointSet& points() const { return ps_; }
  const AnchorFan& fan(PointId id) const;
  const DefiningTracker* tracker(PointId id) const;
  const std::vector<std::vector<PointId>>& buckets() const { return buckets_; }
  const std::vector<PointId>& x_order() const { return xorder_; }
  int max_depth_numerator() const;

  // The m deepest ids in selection order (used by reports and tests).
  std::vector<PointId> deepest(int m) const;

  // Replaces the per-bucket orders (state reload); the id multiset must match.
  void reorder_buckets(const std::vector<std::vector<PointId>>& order);

 private:
  struct Anchor {
    AnchorFan fan;
    std::optional<DefiningTracker> tracker;
    int bucket = 0;
    Anchor(AnchorFan&& f) : fan(std::move(f)) {}
  };

  PointSet ps_;
  std::map<PointId, Anchor> anchors_;
  std::vector<std::vector<PointId>> buckets_;
  std::vector<PointId> xorder_;
  bool with_trackers_;
  std::size_t warn_above_;
  bool warned_ = false;

  void bucket_move(PointId id, int from, int to);
  void bucket_erase(PointId id, int b);
  std::size_t xorder_pos(const Pt& q) const;
};

}  // namespace dd
