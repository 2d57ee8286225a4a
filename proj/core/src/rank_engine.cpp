#include "depthcore/rank_engine.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <set>

namespace dd {

namespace {
int bucket_cap(std::size_t n) { return static_cast<int>((n + 1) / 2); }
}

PointId RankEngine::insert(const Pt& q) {
  PointId qid = ps_.insert(q);
  std::size_t n_new = ps_.size();
  if (n_new > warn_above_ && !warned_) {
    warned_ = true;
    std::fprintf(stderr,
                 "depthcore: rank structure past %zu points; memory grows "
                 "quadratically from here\n",
                 warn_above_);
  }
  if (static_cast<int>(buckets_.size()) < bucket_cap(n_new) + 1)
    buckets_.resize(bucket_cap(n_new) + 1);

  for (auto& [pid, a] : anchors_) {
    int k_old = a.bucket;
    a.fan.on_point_inserted(qid);
    if (a.tracker) a.tracker->after_insert(qid);
    int k_new = a.fan.depth_numerator();
    assert(k_new - k_old >= -1 && k_new - k_old <= 1);
    if (k_new != k_old) bucket_move(pid, k_old, k_new);
  }

  auto it = anchors_.emplace(qid, Anchor(AnchorFan::build(ps_, qid))).first;
  Anchor& a = it->second;
  if (with_trackers_) a.tracker.emplace(ps_, a.fan);
  a.bucket = a.fan.depth_numerator();
  assert(a.bucket <= bucket_cap(n_new));
  buckets_[static_cast<std::size_t>(a.bucket)].push_back(qid);

  xorder_.insert(xorder_.begin() + static_cast<long>(xorder_pos(q)), qid);
  return qid;
}

void RankEngine::erase(PointId id) {
  if (!ps_.contains(id)) throw DepthError(Errc::UnknownPoint, "erase: unknown id", id);
  Pt q = ps_.at(id);

  bucket_erase(id, anchors_.at(id).bucket);
  anchors_.erase(id);
  xorder_.erase(std::find(xorder_.begin(), xorder_.end(), id));

  for (auto& [pid, a] : anchors_) {
    int k_old = a.bucket;
    a.fan.on_point_deleted(id, q);
    if (a.tracker) a.tracker->after_delete(id, q);
    int k_new = a.fan.depth_numerator();
    assert(k_new - k_old >= -1 && k_new - k_old <= 1);
    if (k_new != k_old) bucket_move(pid, k_old, k_new);
  }

  ps_.erase(id);
  std::size_t cap = static_cast<std::size_t>(bucket_cap(ps_.size())) + 1;
  if (ps_.size() == 0) cap = 0;
  while (buckets_.size() > cap) {
    assert(buckets_.back().empty());
    buckets_.pop_back();
  }
}

void RankEngine::erase_at(const Pt& q) {
  auto id = ps_.find(q);
  if (!id) throw DepthError(Errc::UnknownPoint, "erase_at: no point at " + pt_str(q));
  erase(*id);
}

std::pair<int, int> RankEngine::depth_of(PointId id) const {
  auto it = anchors_.find(id);
  if (it == anchors_.end()) throw DepthError(Errc::UnknownPoint, "depth_of: unknown id", id);
  return {it->second.bucket, static_cast<int>(ps_.size())};
}

std::vector<PointId> RankEngine::deepest(int m) const {
  std::vector<PointId> out;
  out.reserve(static_cast<std::size_t>(m));
  for (auto b = buckets_.rbegin(); b != buckets_.rend() && static_cast<int>(out.size()) < m; ++b)
    for (PointId id : *b) {
      if (static_cast<int>(out.size()) >= m) break;
      out.push_back(id);
    }
  return out;
}

Polygon RankEngine::rank_contour(int m) const {
  int n = static_cast<int>(ps_.size());
  if (m < 1 || m > n) throw DepthError(Errc::OutOfRange, "rank contour size out of range");
  auto sel = deepest(m);
  std::set<PointId> mark(sel.begin(), sel.end());
  std::vector<Pt> pts;
  pts.reserve(sel.size());
  for (PointId id : xorder_)
    if (mark.count(id)) pts.push_back(ps_.at(id));
  // Points arrive sorted by (x, y): Graham scan of each hull is linear.
  if (pts.size() == 1) return Polygon{Polygon::Kind::Point, {pts[0]}};
  if (pts.size() == 2) return Polygon{Polygon::Kind::Segment, {pts[0], pts[1]}};
  std::vector<Pt> lo = lower_hull(pts), up = upper_hull(pts);
  if (lo.size() == 2 && up.size() == 2)
    return Polygon{Polygon::Kind::Segment, {pts.front(), pts.back()}};
  std::vector<Pt> ring = lo;
  for (int i = static_cast<int>(up.size()) - 2; i >= 1; --i)
    ring.push_back(up[static_cast<std::size_t>(i)]);
  return canonical_polygon(std::move(ring));
}

const AnchorFan& RankEngine::fan(PointId id) const {
  auto it = anchors_.find(id);
  if (it == anchors_.end()) throw DepthError(Errc::UnknownPoint, "fan: unknown id", id);
  return it->second.fan;
}

const DefiningTracker* RankEngine::tracker(PointId id) const {
  auto it = anchors_.find(id);
  if (it == anchors_.end()) throw DepthError(Errc::UnknownPoint, "tracker: unknown id", id);
  return it->second.tracker ? &*it->second.tracker : nullptr;
}

int RankEngine::max_depth_numerator() const {
  for (auto b = buckets_.rbegin(); b != buckets_.rend(); ++b)
    if (!b->empty()) return static_cast<int>(buckets_.rend() - b) - 1;
  return 0;
}

void RankEngine::bucket_move(PointId id, int from, int to) {
  bucket_erase(id, from);
  assert(to >= 0 && to < static_cast<int>(buckets_.size()));
  buckets_[static_cast<std::size_t>(to)].push_back(id);
  anchors_.at(id).bucket = to;
}

void RankEngine::bucket_erase(PointId id, int b) {
  auto& v = buckets_.at(static_cast<std::size_t>(b));
  auto it = std::find(v.begin(), v.end(), id);
  assert(it != v.end());
  v.erase(it);
}

std::size_t RankEngine::xorder_pos(const Pt& q) const {
  auto less = [&](PointId id, const Pt& p) { return lex_less(ps_.at(id), p); };
  return static_cast<std::size_t>(
      std::lower_bound(xorder_.begin(), xorder_.end(), q, less) - xorder_.begin());
}

void RankEngine::reorder_buckets(const std::vector<std::vector<PointId>>& order) {
  std::multiset<PointId> a, b;
  for (auto& v : buckets_)
    for (PointId id : v) a.insert(id);
  for (auto& v : order)
    for (PointId id : v) b.insert(id);
  if (a != b || order.size() > buckets_.size())
    throw DepthError(Errc::OrderViolation, "reorder_buckets: id multiset mismatch");
  for (std::size_t i = 0; i < buckets_.size(); ++i) {
    buckets_[i] = i < order.size() ? order[i] : std::vector<PointId>{};
    for (PointId id : buckets_[i]) {
      if (anchors_.at(id).fan.depth_numerator() != static_cast<int>(i))
        throw DepthError(Errc::OrderViolation, "reorder_buckets: wrong bucket for id", id);
      anchors_.at(id).bucket = static_cast<int>(i);
    }
  }
}

}  // namespace dd
