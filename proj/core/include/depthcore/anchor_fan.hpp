#pragma once

#include <optional>
#include <vector>

#include "depthcore/point_set.hpp"

namespace dd {

// One of the 2(n-1) meaningful half-plane vectors of an anchor. `to` is true
// when the vector points toward its data point, false for the antipode. The
// half-plane associated with the vector is everything to its right (closed).
struct FanKey {
  PointId pid;
  bool to;
  friend bool operator==(const FanKey& a, const FanKey& b) {
    return a.pid == b.pid && a.to == b.to;
  }
};

struct FanLeaf {
  FanKey key;
  Dir dir;
  int depth;  // data points in the closed half-plane, anchor included
};

// Balanced search tree over an anchor's meaningful half-plane vectors,
// ordered by angle, augmented with subtree min/max depth and a lazy
// subtree-addition tag. All update paths are O(log n).
class AnchorFan {
 public:
  AnchorFan(const PointSet& ps, PointId anchor) : ps_(&ps), anchor_(anchor) {}
  ~AnchorFan() { clear(); }

  AnchorFan(AnchorFan&& o) noexcept { steal(o); }
  AnchorFan& operator=(AnchorFan&& o) noexcept {
    if (this != &o) { clear(); steal(o); }
    return *this;
  }
  AnchorFan(const AnchorFan&) = delete;
  AnchorFan& operator=(const AnchorFan&) = delete;

  PointId anchor() const { return anchor_; }
  std::size_t leaf_count() const { return count_; }
  // Points represented, anchor included.
  std::size_t n() const { return count_ / 2 + 1; }

  // Closed CCW range update; the interval may wrap through the 0/2pi seam,
  // in which case it is applied as the two sub-intervals.
  void increment_range(const Dir& left, const Dir& right) { range_add(left, right, +1); }
  void decrement_range(const Dir& left, const Dir& right) { range_add(left, right, -1); }

  void insert_vector(const Dir& dir, int depth, bool to, PointId pid);
  void remove_vector(const Dir& dir);

  int min_depth() const;  // throws EmptyTree when the fan has no vectors
  int max_depth() const;

  // Anchor's half-space depth numerator. Defined as 1 for n()==1 (the whole
  // one-point set), min_depth()-1 otherwise.
  int depth_numerator() const;

  // First vector strictly after `from` (CCW for next, CW for prev) whose
  // depth equals k, wrapping around the seam; `from` itself is the last
  // candidate. nullopt iff no vector has depth k.
  std::optional<FanLeaf> next(const Dir& from, int k, bool inclusive = false) const;
  std::optional<FanLeaf> prev(const Dir& from, int k, bool inclusive = false) const;

  std::optional<FanLeaf> find(const Dir& dir) const;
  // Cyclic neighbors of an angular position (which need not be a leaf).
  std::optional<FanLeaf> pred_of(const Dir& dir) const;
  std::optional<FanLeaf> succ_of(const Dir& dir) const;

  // Full update for one data-point insertion/deletion (increment/decrement
  // plus the two vector insertions/removals, in the order of the update rule).
  void on_point_inserted(PointId q);
  void on_point_deleted(PointId q, const Pt& q_pos);

  // Builds the fan from scratch over the anchor's current point set.
  static AnchorFan build(const PointSet& ps, PointId anchor);

  std::vector<FanLeaf> leaves() const;  // in CCW order from the positive x-axis
  int height() const;
  Dir dir_of(const FanKey& k) const;

 private:
  struct Node {
    FanKey key;
    int depth;       // absolute once ancestor tags are settled
    int add = 0;     // pending addition for the whole subtree, self included
    int mn, mx;      // subtree min/max, excluding this node's own `add`
    int h = 1;
    Node *l = nullptr, *r = nullptr;
    explicit Node(FanKey k, int d) : key(k), depth(d), mn(d), mx(d) {}
  };

  const PointSet* ps_;
  PointId anchor_;
  Node* root_ = nullptr;
  std::size_t count_ = 0;

  int cmp_keys(const FanKey& a, const FanKey& b) const;
  int cmp_dir_key(const Dir& d, const FanKey& b) const;

  static void push(Node* v);
  static void pull(Node* v);
  static int hgt(const Node* v) { return v ? v->h : 0; }
  static Node* rot_l(Node* v);
  static Node* rot_r(Node* v);
  static Node* rebalance(Node* v);
  Node* insert_rec(Node* v, Node* nu);
  Node* erase_rec(Node* v, const Dir& dir, bool& found);
  static Node* detach_min(Node* v, Node*& out);

  void range_add(const Dir& left, const Dir& right, int delta);
  void add_ge(Node* v, const Dir& lo, int delta);
  void add_le(Node* v, const Dir& hi, int delta);
  void add_between(Node* v, const Dir& lo, const Dir& hi, int delta);

  const Node* first_depth_ge(const Node* v, const Dir& from, int k, bool strict, int acc) const;
  const Node* first_depth_le(const Node* v, const Dir& from, int k, bool strict, int acc) const;
  const Node* leftmost_depth(const Node* v, int k, int acc) const;
  const Node* rightmost_depth(const Node* v, int k, int acc) const;
  int effective_depth_of(const Node* target) const;

  void clear();
  static void free_rec(Node* v);
  void steal(AnchorFan& o);
  Node* build_rec(std::vector<Node*>& ns, std::size_t lo, std::size_t hi);
};

}  // namespace dd
