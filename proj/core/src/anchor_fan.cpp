#include "depthcore/anchor_fan.hpp"

#include <algorithm>
#include <cassert>

namespace dd {

Dir AnchorFan::dir_of(const FanKey& k) const {
  const Pt& a = ps_->at(anchor_);
  const Pt& p = ps_->at(k.pid);
  return k.to ? dir_between(a, p) : dir_between(p, a);
}

int AnchorFan::cmp_keys(const FanKey& a, const FanKey& b) const {
  return cmp_angle(dir_of(a), dir_of(b));
}

int AnchorFan::cmp_dir_key(const Dir& d, const FanKey& b) const {
  return cmp_angle(d, dir_of(b));
}

void AnchorFan::push(Node* v) {
  if (v->add == 0) return;
  v->depth += v->add;
  v->mn += v->add;
  v->mx += v->add;
  if (v->l) v->l->add += v->add;
  if (v->r) v->r->add += v->add;
  v->add = 0;
}

void AnchorFan::pull(Node* v) {
  v->h = 1 + std::max(hgt(v->l), hgt(v->r));
  int mn = v->depth, mx = v->depth;
  if (v->l) {
    mn = std::min(mn, v->l->mn + v->l->add);
    mx = std::max(mx, v->l->mx + v->l->add);
  }
  if (v->r) {
    mn = std::min(mn, v->r->mn + v->r->add);
    mx = std::max(mx, v->r->mx + v->r->add);
  }
  v->mn = mn;
  v->mx = mx;
}

AnchorFan::Node* AnchorFan::rot_l(Node* v) {
  Node* r = v->r;
  push(r);
  v->r = r->l;
  r->l = v;
  pull(v);
  pull(r);
  return r;
}

AnchorFan::Node* AnchorFan::rot_r(Node* v) {
  Node* l = v->l;
  push(l);
  v->l = l->r;
  l->r = v;
  pull(v);
  pull(l);
  return l;
}

AnchorFan::Node* AnchorFan::rebalance(Node* v) {
  int bf = hgt(v->l) - hgt(v->r);
  if (bf > 1) {
    push(v->l);
    if (hgt(v->l->l) < hgt(v->l->r)) v->l = rot_l(v->l);
    return rot_r(v);
  }
  if (bf < -1) {
    push(v->r);
    if (hgt(v->r->r) < hgt(v->r->l)) v->r = rot_r(v->r);
    return rot_l(v);
  }
  return v;
}

AnchorFan::Node* AnchorFan::insert_rec(Node* v, Node* nu) {
  if (!v) return nu;
  push(v);
  int c = cmp_keys(nu->key, v->key);
  if (c == 0)
    throw DepthError(Errc::DuplicateDirection, "insert_vector: direction already present",
                     nu->key.pid, v->key.pid);
  if (c < 0)
    v->l = insert_rec(v->l, nu);
  else
    v->r = insert_rec(v->r, nu);
  pull(v);
  return rebalance(v);
}

void AnchorFan::insert_vector(const Dir& dir, int depth, bool to, PointId pid) {
#ifdef DD_HEAVY_ASSERTS
  assert(same_ray(dir, dir_of(FanKey{pid, to})));
#else
  (void)dir;
#endif
  Node* nu = new Node(FanKey{pid, to}, depth);
  try {
    root_ = insert_rec(root_, nu);
  } catch (...) {
    delete nu;
    throw;
  }
  ++count_;
}

AnchorFan::Node* AnchorFan::detach_min(Node* v, Node*& out) {
  push(v);
  if (!v->l) {
    out = v;
    return v->r;
  }
  v->l = detach_min(v->l, out);
  pull(v);
  return rebalance(v);
}

AnchorFan::Node* AnchorFan::erase_rec(Node* v, const Dir& dir, bool& found) {
  if (!v) {
    found = false;
    return nullptr;
  }
  push(v);
  int c = cmp_dir_key(dir, v->key);
  if (c == 0) {
    found = true;
    if (!v->l || !v->r) {
      Node* child = v->l ? v->l : v->r;
      delete v;
      return child;
    }
    Node* out = nullptr;
    Node* nr = detach_min(v->r, out);
    out->l = v->l;
    out->r = nr;
    out->add = 0;
    delete v;
    pull(out);
    return rebalance(out);
  }
  if (c < 0)
    v->l = erase_rec(v->l, dir, found);
  else
    v->r = erase_rec(v->r, dir, found);
  if (!found) return v;
  pull(v);
  return rebalance(v);
}

void AnchorFan::remove_vector(const Dir& dir) {
  bool found = false;
  if (root_) root_ = erase_rec(root_, dir, found);
  if (!found)
    throw DepthError(Errc::MissingDirection, "remove_vector: no vector at that direction");
  --count_;
}

void AnchorFan::range_add(const Dir& left, const Dir& right, int delta) {
  if (!root_) throw DepthError(Errc::EmptyTree, "range update on empty fan");
  int c = cmp_angle(left, right);
  if (c <= 0) {
    add_between(root_, left, right, delta);
  } else {
    add_ge(root_, left, delta);
    add_le(root_, right, delta);
  }
}

void AnchorFan::add_ge(Node* v, const Dir& lo, int delta) {
  if (!v) return;
  push(v);
  if (cmp_dir_key(lo, v->key) <= 0) {
    v->depth += delta;
    if (v->r) v->r->add += delta;
    add_ge(v->l, lo, delta);
  } else {
    add_ge(v->r, lo, delta);
  }
  pull(v);
}

void AnchorFan::add_le(Node* v, const Dir& hi, int delta) {
  if (!v) return;
  push(v);
  if (cmp_dir_key(hi, v->key) >= 0) {
    v->depth += delta;
    if (v->l) v->l->add += delta;
    add_le(v->r, hi, delta);
  } else {
    add_le(v->l, hi, delta);
  }
  pull(v);
}

void AnchorFan::add_between(Node* v, const Dir& lo, const Dir& hi, int delta) {
  if (!v) return;
  push(v);
  if (cmp_dir_key(lo, v->key) > 0) {
    add_between(v->r, lo, hi, delta);
  } else if (cmp_dir_key(hi, v->key) < 0) {
    add_between(v->l, lo, hi, delta);
  } else {
    v->depth += delta;
    add_ge(v->l, lo, delta);
    add_le(v->r, hi, delta);
  }
  pull(v);
}

int AnchorFan::min_depth() const {
  if (!root_) throw DepthError(Errc::EmptyTree, "min_depth of empty fan");
  return root_->mn + root_->add;
}

int AnchorFan::max_depth() const {
  if (!root_) throw DepthError(Errc::EmptyTree, "max_depth of empty fan");
  return root_->mx + root_->add;
}

int AnchorFan::depth_numerator() const {
  if (!root_) return 1;  // one-point set: the whole set is the witness
  return min_depth() - 1;
}

const AnchorFan::Node* AnchorFan::leftmost_depth(const Node* v, int k, int acc) const {
  if (!v) return nullptr;
  int a = acc + v->add;
  if (k < v->mn + a || k > v->mx + a) return nullptr;
  if (const Node* r = leftmost_depth(v->l, k, a)) return r;
  if (v->depth + a == k) return v;
  return leftmost_depth(v->r, k, a);
}

const AnchorFan::Node* AnchorFan::rightmost_depth(const Node* v, int k, int acc) const {
  if (!v) return nullptr;
  int a = acc + v->add;
  if (k < v->mn + a || k > v->mx + a) return nullptr;
  if (const Node* r = rightmost_depth(v->r, k, a)) return r;
  if (v->depth + a == k) return v;
  return rightmost_depth(v->l, k, a);
}

const AnchorFan::Node* AnchorFan::first_depth_ge(const Node* v, const Dir& from, int k,
                                                 bool strict, int acc) const {
  if (!v) return nullptr;
  int a = acc + v->add;
  if (k < v->mn + a || k > v->mx + a) return nullptr;
  int c = cmp_dir_key(from, v->key);
  bool qual = strict ? c < 0 : c <= 0;
  if (!qual) return first_depth_ge(v->r, from, k, strict, a);
  if (const Node* r = first_depth_ge(v->l, from, k, strict, a)) return r;
  if (v->depth + a == k) return v;
  return leftmost_depth(v->r, k, a);
}

const AnchorFan::Node* AnchorFan::first_depth_le(const Node* v, const Dir& from, int k,
                                                 bool strict, int acc) const {
  if (!v) return nullptr;
  int a = acc + v->add;
  if (k < v->mn + a || k > v->mx + a) return nullptr;
  int c = cmp_dir_key(from, v->key);
  bool qual = strict ? c > 0 : c >= 0;
  if (!qual) return first_depth_le(v->l, from, k, strict, a);
  if (const Node* r = first_depth_le(v->r, from, k, strict, a)) return r;
  if (v->depth + a == k) return v;
  return rightmost_depth(v->l, k, a);
}

std::optional<FanLeaf> AnchorFan::next(const Dir& from, int k, bool inclusive) const {
  if (!root_) return std::nullopt;
  const Node* r = first_depth_ge(root_, from, k, /*strict=*/!inclusive, 0);
  if (!r) r = leftmost_depth(root_, k, 0);  // wrap across the seam
  if (!r) return std::nullopt;
  return FanLeaf{r->key, dir_of(r->key), k};
}

std::optional<FanLeaf> AnchorFan::prev(const Dir& from, int k, bool inclusive) const {
  if (!root_) return std::nullopt;
  const Node* r = first_depth_le(root_, from, k, !inclusive, 0);
  if (!r) r = rightmost_depth(root_, k, 0);
  if (!r) return std::nullopt;
  return FanLeaf{r->key, dir_of(r->key), k};
}

std::optional<FanLeaf> AnchorFan::find(const Dir& dir) const {
  const Node* v = root_;
  int acc = 0;
  while (v) {
    acc += v->add;
    int c = cmp_dir_key(dir, v->key);
    if (c == 0) return FanLeaf{v->key, dir_of(v->key), v->depth + acc};
    v = c < 0 ? v->l : v->r;
  }
  return std::nullopt;
}

std::optional<FanLeaf> AnchorFan::pred_of(const Dir& dir) const {
  const Node* v = root_;
  const Node* best = nullptr;
  int acc = 0, best_acc = 0;
  while (v) {
    acc += v->add;
    if (cmp_dir_key(dir, v->key) > 0) {
      best = v;
      best_acc = acc;
      v = v->r;
    } else {
      v = v->l;
    }
  }
  if (!best) {  // wrap to the angularly largest vector
    v = root_;
    acc = 0;
    while (v) {
      acc += v->add;
      best = v;
      best_acc = acc;
      v = v->r;
    }
  }
  if (!best) return std::nullopt;
  return FanLeaf{best->key, dir_of(best->key), best->depth + best_acc};
}

std::optional<FanLeaf> AnchorFan::succ_of(const Dir& dir) const {
  const Node* v = root_;
  const Node* best = nullptr;
  int acc = 0, best_acc = 0;
  while (v) {
    acc += v->add;
    if (cmp_dir_key(dir, v->key) < 0) {
      best = v;
      best_acc = acc;
      v = v->l;
    } else {
      v = v->r;
    }
  }
  if (!best) {
    v = root_;
    acc = 0;
    while (v) {
      acc += v->add;
      best = v;
      best_acc = acc;
      v = v->l;
    }
  }
  if (!best) return std::nullopt;
  return FanLeaf{best->key, dir_of(best->key), best->depth + best_acc};
}

void AnchorFan::on_point_inserted(PointId q) {
  Dir dto = dir_between(ps_->at(anchor_), ps_->at(q));
  if (!root_) {
    // First companion point: both closed half-planes contain anchor and q.
    insert_vector(dto, 2, true, q);
    insert_vector(antipode(dto), 2, false, q);
    return;
  }
  increment_range(dto, antipode(dto));
  auto p = pred_of(dto);
  assert(p.has_value());
  // Crossing rule: moving CCW from the neighbor to the new vector, q enters
  // the half-plane; the neighbor's own point leaves iff it is an away vector.
  int d = p->depth + 1 - (p->key.to ? 0 : 1);
  int n_new = static_cast<int>(n()) + 1;
  insert_vector(dto, d, true, q);
  insert_vector(antipode(dto), n_new + 2 - d, false, q);
}

void AnchorFan::on_point_deleted(PointId q, const Pt& q_pos) {
  (void)q;
  Dir dto = dir_between(ps_->at(anchor_), q_pos);
  decrement_range(dto, antipode(dto));
  remove_vector(dto);
  remove_vector(antipode(dto));
}

AnchorFan AnchorFan::build(const PointSet& ps, PointId anchor) {
  AnchorFan f(ps, anchor);
  const Pt& a = ps.at(anchor);
  std::vector<std::pair<FanKey, Dir>> ks;
  ks.reserve(2 * (ps.size() - 1));
  for (const auto& [id, p] : ps.points()) {
    if (id == anchor) continue;
    Dir d = dir_between(a, p);
    ks.push_back({FanKey{id, true}, d});
    ks.push_back({FanKey{id, false}, antipode(d)});
  }
  if (ks.empty()) return f;
  std::sort(ks.begin(), ks.end(),
            [](const auto& x, const auto& y) { return cmp_angle(x.second, y.second) < 0; });
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (cmp_angle(ks[i - 1].second, ks[i].second) == 0)
      throw DepthError(Errc::DuplicateDirection, "build: coincident directions",
                       ks[i - 1].first.pid, ks[i].first.pid);
  }
  // Depth of the first vector by direct count, then the crossing-rule sweep.
  std::vector<int> depth(ks.size());
  int d0 = 1;
  for (const auto& [id, p] : ps.points()) {
    if (id == anchor) continue;
    if (cross_sign(ks[0].second, dir_between(a, p)) <= 0) ++d0;
  }
  depth[0] = d0;
  for (std::size_t i = 1; i < ks.size(); ++i)
    depth[i] = depth[i - 1] + (ks[i].first.to ? 1 : 0) - (ks[i - 1].first.to ? 0 : 1);

  std::vector<Node*> ns(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) ns[i] = new Node(ks[i].first, depth[i]);
  f.root_ = f.build_rec(ns, 0, ns.size());
  f.count_ = ns.size();
  return f;
}

AnchorFan::Node* AnchorFan::build_rec(std::vector<Node*>& ns, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return nullptr;
  std::size_t mid = (lo + hi) / 2;
  Node* v = ns[mid];
  v->l = build_rec(ns, lo, mid);
  v->r = build_rec(ns, mid + 1, hi);
  pull(v);
  return v;
}

std::vector<FanLeaf> AnchorFan::leaves() const {
  std::vector<FanLeaf> out;
  out.reserve(count_);
  struct Walker {
    const AnchorFan* f;
    std::vector<FanLeaf>* out;
    void walk(const Node* v, int acc) {
      if (!v) return;
      int a = acc + v->add;
      walk(v->l, a);
      out->push_back(FanLeaf{v->key, f->dir_of(v->key), v->depth + a});
      walk(v->r, a);
    }
  } w{this, &out};
  w.walk(root_, 0);
  return out;
}

int AnchorFan::height() const { return hgt(root_); }

void AnchorFan::free_rec(Node* v) {
  if (!v) return;
  free_rec(v->l);
  free_rec(v->r);
  delete v;
}

void AnchorFan::clear() {
  free_rec(root_);
  root_ = nullptr;
  count_ = 0;
}

void AnchorFan::steal(AnchorFan& o) {
  ps_ = o.ps_;
  anchor_ = o.anchor_;
  root_ = o.root_;
  count_ = o.count_;
  o.root_ = nullptr;
  o.count_ = 0;
}

}  // namespace dd
