#include "depthcore/defining_tracker.hpp"

#include <cassert>

namespace dd {

namespace {
const Dir kEast{1, 0}, kNorth{0, 1}, kWest{-1, 0}, kSouth{0, -1};
}

const DefSide& DefiningTracker::l1() const {
  if (!pair_) throw DepthError(Errc::DegeneratePair, "anchor is on a degenerate contour");
  return pair_->first;
}

const DefSide& DefiningTracker::l2() const {
  if (!pair_) throw DepthError(Errc::DegeneratePair, "anchor is on a degenerate contour");
  return pair_->second;
}

Dir DefiningTracker::anchor_dir_to(const Pt& q) const {
  return dir_between(ps_->at(fan_->anchor()), q);
}

void DefiningTracker::set_pair(const FanLeaf& a, const FanLeaf& b) {
  // Canonical order: the CCW angle from l1's vector to l2's vector lies in
  // (pi, 2pi). Antipodal defining vectors cannot happen off degenerate
  // contours, so exactly one of the two orders qualifies.
  int oc = offset_class(a.dir, b.dir);
  assert(oc == 1 || oc == 3);
  if (oc == 3)
    pair_ = std::make_pair(DefSide{a.key, a.dir}, DefSide{b.key, b.dir});
  else
    pair_ = std::make_pair(DefSide{b.key, b.dir}, DefSide{a.key, a.dir});
}

Region DefiningTracker::classify(const Pt& q) const {
  if (!pair_) throw DepthError(Errc::DegeneratePair, "classify on degenerate anchor");
  Dir dq = anchor_dir_to(q);
  const Dir& v1 = pair_->first.dir;
  const Dir& v2 = pair_->second.dir;
  int c1 = cross_sign(v1, dq);
  int c2 = cross_sign(v2, dq);
  if (c1 == 0) {
    // On l1's line. The contour edge at l1 runs along +v1.
    return dot_sign(v1, dq) > 0 ? Region::OnLineTowardEdge : Region::OnLineAwayFromEdge;
  }
  if (c2 == 0) {
    // On l2's line. The contour edge at l2 runs along -v2.
    return dot_sign(v2, dq) < 0 ? Region::OnLineTowardEdge : Region::OnLineAwayFromEdge;
  }
  bool in1 = c1 < 0, in2 = c2 < 0;  // strictly inside the closed half-planes
  if (in1 && in2) return Region::R4;
  if (in1) return Region::R2;
  if (in2) return Region::R3;
  return Region::R1;
}

int DefiningTracker::depth_change(const Pt& q, bool inserting) const {
  Region r = classify(q);
  if (inserting) return r == Region::R4 ? +1 : 0;
  switch (r) {
    case Region::R1: return 0;
    case Region::R2:
    case Region::R3:
    case Region::R4: return -1;
    case Region::OnLineTowardEdge: return 0;
    case Region::OnLineAwayFromEdge: return -1;
  }
  return 0;
}

std::vector<FanLeaf> DefiningTracker::min_depth_extremes() const {
  std::vector<FanLeaf> ext;
  int kk = fan_->min_depth();
  const Dir axes[4] = {kEast, kNorth, kWest, kSouth};
  for (int i = 0; i < 4; ++i) {
    const Dir& a = axes[i];
    const Dir& b = axes[(i + 1) % 4];
    auto first = fan_->next(a, kk, /*inclusive=*/true);
    if (!first || !in_ccw_interval(a, b, first->dir, true, false)) continue;
    auto last = fan_->prev(b, kk, /*inclusive=*/false);
    assert(last && in_ccw_interval(a, b, last->dir, true, false));
    ext.push_back(*first);
    if (!(last->key == first->key)) ext.push_back(*last);
  }
  return ext;
}

bool DefiningTracker::degeneracy_test() const {
  std::size_t n = fan_->n();
  if (n <= 2) return true;  // single point or segment contour
  auto ext = min_depth_extremes();
  assert(!ext.empty());
  if (ext.size() == 1) return false;
  // Degenerate iff no cyclic gap between consecutive witnesses reaches pi,
  // i.e. the witnesses do not fit in a closed semicircle.
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const Dir& u = ext[i].dir;
    const Dir& w = ext[(i + 1) % ext.size()].dir;
    int oc = offset_class(u, w);
    if (oc == 0 || oc == 2 || oc == 3) return false;
  }
  return true;
}

void DefiningTracker::recover() {
  if (degeneracy_test())
    throw DepthError(Errc::StillDegenerate, "recover: anchor is degenerate");
  if (!try_recover())
    throw DepthError(Errc::StillDegenerate, "recover: witnesses not in an open semicircle");
}

bool DefiningTracker::try_recover() {
  if (fan_->n() <= 2) return false;
  auto ext = min_depth_extremes();
  if (ext.size() < 2) return false;
  // The defining pair brackets the cyclic gap of angular width > pi; every
  // vector strictly inside that gap bounds a half-plane with >= k+2 points.
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const FanLeaf& u = ext[i];
    const FanLeaf& w = ext[(i + 1) % ext.size()];
    if (offset_class(u.dir, w.dir) == 3) {
      set_pair(u, w);
      return true;
    }
  }
  return false;
}

void DefiningTracker::reset_from_fan() {
  if (degeneracy_test() || !try_recover()) pair_.reset();
}

void DefiningTracker::after_insert(PointId q) {
  if (!pair_) {
    reset_from_fan();
    return;
  }
  if (degeneracy_test()) {
    pair_.reset();
    return;
  }
  const Pt& qp = ps_->at(q);
  Region r = classify(qp);
  int k_new = fan_->depth_numerator();
  DefSide& s1 = pair_->first;
  DefSide& s2 = pair_->second;
  switch (r) {
    case Region::R1:
      break;
    case Region::R3: {
      // l2 gained the new point; its replacement is the first vector CCW
      // from it with the defining count.
      auto m2 = fan_->next(s2.dir, k_new + 1);
      assert(m2);
      assert(in_ccw_interval(s2.dir, s1.dir, m2->dir, false, false));
      s2 = DefSide{m2->key, m2->dir};
      break;
    }
    case Region::R2: {
      auto m1 = fan_->prev(s1.dir, k_new + 1);
      assert(m1);
      assert(in_ccw_interval(s2.dir, s1.dir, m1->dir, false, false));
      s1 = DefSide{m1->key, m1->dir};
      break;
    }
    case Region::R4: {
      Dir gamma = anchor_dir_to(qp);
      Dir pi1 = antipode(s1.dir);
      auto r2 = fan_->next(pi1, k_new + 1);
      assert(r2);
      if (!(r2->key == s2.key) && in_ccw_interval(pi1, gamma, r2->dir, false, true)) {
        s2 = DefSide{r2->key, r2->dir};
      } else {
        assert(r2->key == s2.key);
        Dir pi2 = antipode(s2.dir);
        auto r1 = fan_->prev(pi2, k_new + 1);
        assert(r1);
        if (!(r1->key == s1.key) &&
            in_ccw_interval(antipode(gamma), pi2, r1->dir, true, false)) {
          s1 = DefSide{r1->key, r1->dir};
        } else {
          assert(r1->key == s1.key);
        }
      }
      break;
    }
    case Region::OnLineTowardEdge:
    case Region::OnLineAwayFromEdge:
      assert(false && "insertion onto a defining line violates general position");
      break;
  }
}

void DefiningTracker::after_delete(PointId q, const Pt& q_pos) {
  if (!pair_) {
    reset_from_fan();
    return;
  }
  if (degeneracy_test()) {
    pair_.reset();
    return;
  }
  int k_new = fan_->depth_numerator();
  DefSide& s1 = pair_->first;
  DefSide& s2 = pair_->second;

  if (s1.key.pid == q || s2.key.pid == q) {
    // The deleted point was a defining partner: that side's vector vanished
    // from the fan and must be replaced (the on-line deletion case).
    assert(!(s1.key.pid == q && s2.key.pid == q));
    if (s1.key.pid == q) {
      if (s1.key.to) {
        // Toward the contour edge; depth unchanged.
        auto m1 = fan_->prev(antipode(s2.dir), k_new + 1);
        assert(m1 && in_ccw_interval(s1.dir, antipode(s2.dir), m1->dir, false, false));
        s1 = DefSide{m1->key, m1->dir};
      } else {
        // Away from the edge; depth decreased.
        auto m1 = fan_->prev(s1.dir, k_new + 1);
        assert(m1 && in_ccw_interval(s2.dir, s1.dir, m1->dir, false, false));
        s1 = DefSide{m1->key, m1->dir};
      }
    } else {
      if (!s2.key.to) {
        // Away vector pointing at the partner means q sat toward the edge.
        auto m2 = fan_->next(antipode(s1.dir), k_new + 1);
        assert(m2 && in_ccw_interval(antipode(s1.dir), s2.dir, m2->dir, false, false));
        s2 = DefSide{m2->key, m2->dir};
      } else {
        auto m2 = fan_->next(s2.dir, k_new + 1);
        assert(m2 && in_ccw_interval(s2.dir, s1.dir, m2->dir, false, false));
        s2 = DefSide{m2->key, m2->dir};
      }
    }
    return;
  }

  Region r = classify(q_pos);
  switch (r) {
    case Region::R4:
      break;  // both counts dropped together with the depth
    case Region::R1: {
      // Depth unchanged; at most one side rotates into the freed window.
      Dir gamma = anchor_dir_to(q_pos);
      Dir pi2 = antipode(s2.dir);
      auto r1 = fan_->prev(pi2, k_new + 1);
      assert(r1);
      bool moved1 = false;
      if (!(r1->key == s1.key) && in_ccw_interval(gamma, pi2, r1->dir, false, false)) {
        s1 = DefSide{r1->key, r1->dir};
        moved1 = true;
      } else {
        assert(r1->key == s1.key);
      }
      Dir pi1 = antipode(s1.dir);
      auto r2 = fan_->next(pi1, k_new + 1);
      assert(r2);
      if (!(r2->key == s2.key) &&
          in_ccw_interval(pi1, antipode(gamma), r2->dir, false, false)) {
        assert(!moved1);
        s2 = DefSide{r2->key, r2->dir};
      } else {
        assert(r2->key == s2.key);
      }
      break;
    }
    case Region::R3: {
      // q left l2's half-plane only: l2 keeps the new count, l1 rotates.
      Dir away_q = antipode(anchor_dir_to(q_pos));
      auto m1 = fan_->prev(away_q, k_new + 1);
      assert(m1 && in_ccw_interval(s2.dir, away_q, m1->dir, false, false));
      s1 = DefSide{m1->key, m1->dir};
      break;
    }
    case Region::R2: {
      Dir gamma = anchor_dir_to(q_pos);
      auto m2 = fan_->next(gamma, k_new + 1);
      assert(m2 && in_ccw_interval(gamma, s1.dir, m2->dir, false, false));
      s2 = DefSide{m2->key, m2->dir};
      break;
    }
    case Region::OnLineTowardEdge:
    case Region::OnLineAwayFromEdge:
      assert(false && "on-line deletion is the partner case");
      break;
  }
}

}  // namespace dd
