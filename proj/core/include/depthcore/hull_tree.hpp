#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "depthcore/errors.hpp"
#include "depthcore/geometry.hpp"

namespace dd {

// A vertex of the dual arrangement: the crossing of two dual lines, stored
// symbolically (the line ids) together with its exact coordinates.
struct ChainVertex {
  PointId a = kNoPoint, b = kNoPoint;  // a < b
  Pt pos;
  friend bool operator==(const ChainVertex& x, const ChainVertex& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// Node of a hull treap. Hull nodes reference chain-node vertices; they never
// own them. Allocation goes through a per-thread freelist: singleton nodes
// churn on every reassembly.
struct HullNode {
  const ChainVertex* v;
  HullNode *l = nullptr, *r = nullptr;
  const ChainVertex *mn, *mx;  // leftmost / rightmost vertex below
  std::uint32_t size = 1;
  std::uint64_t pri;
  explicit HullNode(const ChainVertex* vv, std::uint64_t p)
      : v(vv), mn(vv), mx(vv), pri(p) {}

  static void* operator new(std::size_t);
  static void operator delete(void*) noexcept;
};

namespace hull {
std::uint32_t size(const HullNode* t);
void free_tree(HullNode* t);
HullNode* merge(HullNode* a, HullNode* b);
// (keys <= x | keys > x) when incl, else (< x | >= x)
std::pair<HullNode*, HullNode*> split(HullNode* t, const Rat& x, bool incl);
void inorder(const HullNode* t, std::vector<const ChainVertex*>& out);

// Common tangent between two vertex-disjoint hulls with all of A strictly
// left of B. sign = +1 for upper hulls, -1 for lower. Returns the tangent's
// endpoints (the rightmost kept vertex of A, leftmost kept vertex of B).
std::pair<const ChainVertex*, const ChainVertex*> find_bridge(const HullNode* A,
                                                              const HullNode* B, int sign);

// Times the logarithmic tangent search gave up and the linear fallback ran
// (test instrumentation; expected to stay 0 on generic data).
int bridge_fallback_count();

// Strict hull of x-sorted distinct vertices (reference path for small cases
// and repairs).
std::vector<const ChainVertex*> scan_hull(const std::vector<const ChainVertex*>& xs, int sign);
}  // namespace hull

// One x-monotone chain of the arrangement (a level or a piece of one during
// stitching), stored as a concatenable-queue treap whose root carries the
// chain's upper and lower hulls; internal nodes keep the hull fragments that
// reassembly hid, following the dynamic-hull discipline.
class Chain {
 public:
  Chain() = default;
  // A vertexless chain riding a single line.
  explicit Chain(PointId line) : left_line_(line), right_line_(line) {}
  ~Chain() { clear(); }

  Chain(Chain&& o) noexcept { steal(o); }
  Chain& operator=(Chain&& o) noexcept {
    if (this != &o) {
      clear();
      steal(o);
    }
    return *this;
  }
  Chain(const Chain&) = delete;
  Chain& operator=(const Chain&) = delete;

  bool empty() const { return root_ == nullptr; }
  std::size_t size() const;
  PointId left_line() const { return left_line_; }
  PointId right_line() const { return right_line_; }
  void set_lines(PointId l, PointId r) {
    left_line_ = l;
    right_line_ = r;
  }

  // Splits at a non-vertex abscissa; the cut segment's line becomes the right
  // ray line of the left part and the left ray line of the right part.
  static std::pair<Chain, Chain> split_at(Chain&& c, const Rat& x);
  // Splits at a vertex abscissa and drops that vertex (deletion stitching).
  static std::pair<Chain, Chain> split_dropping_vertex(Chain&& c, const Rat& x);

  // Concatenation; every vertex of `a` lies strictly left of every vertex of
  // `b`, and a.right_line() must equal b.left_line().
  static Chain join(Chain&& a, Chain&& b);
  // a + new vertex v + b, where v is the crossing that bends the chain from
  // a's right line onto b's left line.
  static Chain join_over(Chain&& a, const ChainVertex& v, Chain&& b);

  std::optional<ChainVertex> pred(const Rat& x) const;  // last vertex with pos.x < x
  std::optional<ChainVertex> succ(const Rat& x) const;  // first vertex with pos.x > x
  std::optional<ChainVertex> vertex_at(const Rat& x) const;
  // Line of the chain piece spanning abscissa x (x not at a vertex).
  PointId line_at(const Rat& x) const;

  std::vector<ChainVertex> vertices() const;
  // Root hulls, left to right. Valid only on a standalone chain (always true
  // outside of internal surgery).
  std::vector<const ChainVertex*> hull(int sign) const;

  // In-order visit of vertices while fn returns true.
  void scan(const std::function<bool(const ChainVertex&)>& fn) const;

  // Builds a chain (with hulls) from x-sorted vertices.
  static Chain from_sorted(const std::vector<ChainVertex>& vs, PointId left_line,
                           PointId right_line);

#ifdef DD_HEAVY_ASSERTS
  void audit() const;  // verifies hulls and fragment conservation
#endif

 private:
  struct Node;
  Node* root_ = nullptr;
  PointId left_line_ = kNoPoint, right_line_ = kNoPoint;

  static Node* merge(Node* a, Node* b);
  static std::pair<Node*, Node*> split(Node* t, const Rat& x, bool incl);
  static void reassemble(Node* v);
  static void disassemble(Node* v);
  static void free_rec(Node* n);
  void clear();
  void steal(Chain& o);
  static Node* build_rec(std::vector<Node*>& ns, std::size_t lo, std::size_t hi);
};

}  // namespace dd
