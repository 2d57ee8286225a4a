#include "depthcore/hull_tree.hpp"

#include <cassert>

namespace dd {

namespace {

std::uint64_t vpri(const ChainVertex& v) {
  std::uint64_t x = (static_cast<std::uint64_t>(v.a) << 32) | v.b;
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

PointId common_line(const ChainVertex& u, const ChainVertex& w) {
  if (u.a == w.a || u.a == w.b) return u.a;
  assert(u.b == w.a || u.b == w.b);
  return u.b;
}

struct NodeFreeList {
  std::vector<void*> slots;
  ~NodeFreeList() {
    for (void* p : slots) ::operator delete(p);
  }
};
thread_local NodeFreeList g_hull_pool;

}  // namespace

void* HullNode::operator new(std::size_t sz) {
  if (!g_hull_pool.slots.empty()) {
    void* p = g_hull_pool.slots.back();
    g_hull_pool.slots.pop_back();
    return p;
  }
  return ::operator new(sz);
}

void HullNode::operator delete(void* p) noexcept {
  if (p) g_hull_pool.slots.push_back(p);
}

namespace hull {

std::uint32_t size(const HullNode* t) { return t ? t->size : 0; }

void free_tree(HullNode* t) {
  if (!t) return;
  free_tree(t->l);
  free_tree(t->r);
  delete t;
}

namespace {
void pull(HullNode* t) {
  t->size = 1 + size(t->l) + size(t->r);
  t->mn = t->l ? t->l->mn : t->v;
  t->mx = t->r ? t->r->mx : t->v;
}
}  // namespace

HullNode* merge(HullNode* a, HullNode* b) {
  if (!a) return b;
  if (!b) return a;
  if (a->pri >= b->pri) {
    a->r = merge(a->r, b);
    pull(a);
    return a;
  }
  b->l = merge(a, b->l);
  pull(b);
  return b;
}

std::pair<HullNode*, HullNode*> split(HullNode* t, const Rat& x, bool incl) {
  if (!t) return {nullptr, nullptr};
  int c = compare(t->v->pos.x, x);
  bool to_left = incl ? c <= 0 : c < 0;
  if (to_left) {
    auto [a, b] = split(t->r, x, incl);
    t->r = a;
    pull(t);
    return {t, b};
  }
  auto [a, b] = split(t->l, x, incl);
  t->l = b;
  pull(t);
  return {a, t};
}

void inorder(const HullNode* t, std::vector<const ChainVertex*>& out) {
  if (!t) return;
  inorder(t->l, out);
  out.push_back(t->v);
  inorder(t->r, out);
}

std::vector<const ChainVertex*> scan_hull(const std::vector<const ChainVertex*>& xs, int sign) {
  std::vector<const ChainVertex*> h;
  for (const ChainVertex* p : xs) {
    while (h.size() >= 2 &&
           sign * orient(h[h.size() - 2]->pos, h.back()->pos, p->pos) >= 0)
      h.pop_back();
    h.push_back(p);
  }
  return h;
}

namespace {

// Linear fallback for the tangent search; correct for any input, used only if
// the logarithmic descent cannot order a tie case.
std::pair<const ChainVertex*, const ChainVertex*> bridge_linear(const HullNode* A,
                                                                const HullNode* B, int sign) {
  std::vector<const ChainVertex*> a, b;
  inorder(A, a);
  inorder(B, b);
  std::vector<const ChainVertex*> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::vector<const ChainVertex*> h = scan_hull(all, sign);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    bool in_a = compare(h[i]->pos.x, a.back()->pos.x) <= 0;
    bool next_in_b = compare(h[i + 1]->pos.x, b.front()->pos.x) >= 0;
    if (in_a && next_in_b) return {h[i], h[i + 1]};
  }
  assert(false && "bridge_linear: no seam edge");
  return {a.back(), b.front()};
}

int g_bridge_fallbacks = 0;

}  // namespace

int bridge_fallback_count() { return g_bridge_fallbacks; }

std::pair<const ChainVertex*, const ChainVertex*> find_bridge(const HullNode* A,
                                                              const HullNode* B, int sign) {
  assert(A && B);
  assert(compare(A->mx->pos.x, B->mn->pos.x) < 0);
  Rat xsep = (A->mx->pos.x + B->mn->pos.x) / Rat(2);

  const HullNode* u = A;
  const HullNode* w = B;
  const ChainVertex *ulo = nullptr, *uhi = nullptr, *wlo = nullptr, *whi = nullptr;
  auto above = [&](const Pt& p, const Pt& q, const Pt& c) { return sign * orient(p, q, c); };

  int steps = 0;
  const int cap = 220;
  for (;;) {
    if (++steps > cap) break;
    const ChainVertex* up = u->l ? u->l->mx : ulo;
    const ChainVertex* us = u->r ? u->r->mn : uhi;
    const ChainVertex* wp = w->l ? w->l->mx : wlo;
    const ChainVertex* ws = w->r ? w->r->mn : whi;
    const Pt& U = u->v->pos;
    const Pt& W = w->v->pos;
    // Tie rules keep the merged hull strict: the tangent's A endpoint is the
    // leftmost qualifying vertex, the B endpoint the rightmost.
    bool uL = up && above(U, W, up->pos) >= 0;
    bool uR = us && above(U, W, us->pos) > 0;
    bool wR = ws && above(U, W, ws->pos) >= 0;
    bool wL = wp && above(U, W, wp->pos) > 0;
    if (uL) {
      if (!u->l) break;
      uhi = u->v;
      u = u->l;
      continue;
    }
    if (wR) {
      if (!w->r) break;
      wlo = w->v;
      w = w->r;
      continue;
    }
    if (uR && wL) {
      // Both sit below their local support edges; decide by where the two
      // support lines cross relative to the separating abscissa.
      const Pt& a0 = U;
      const Pt& a1 = us->pos;
      const Pt& b0 = wp->pos;
      const Pt& b1 = W;
      Rat d1x = a1.x - a0.x, d1y = a1.y - a0.y;
      Rat d2x = b1.x - b0.x, d2y = b1.y - b0.y;
      Rat den = d1x * d2y - d1y * d2x;
      bool move_u;
      if (den.sign() == 0) {
        move_u = false;  // parallel supports: crossing at infinity
      } else {
        Rat t = ((b0.x - a0.x) * d2y - (b0.y - a0.y) * d2x) / den;
        Rat ix = a0.x + t * d1x;
        move_u = ix <= xsep;
      }
      if (move_u) {
        if (!u->r) break;
        ulo = u->v;
        u = u->r;
      } else {
        if (!w->l) break;
        whi = w->v;
        w = w->l;
      }
      continue;
    }
    if (uR) {
      if (!u->r) break;
      ulo = u->v;
      u = u->r;
      continue;
    }
    if (wL) {
      if (!w->l) break;
      whi = w->v;
      w = w->l;
      continue;
    }
    return {u->v, w->v};
  }
  ++g_bridge_fallbacks;
  return bridge_linear(A, B, sign);
}

}  // namespace hull

// ---------------------------------------------------------------------------
// Chain: treap over vertices with per-node hull fragments.

struct Chain::Node {
  ChainVertex v;
  Node *l = nullptr, *r = nullptr;
  std::uint64_t pri;
  std::uint32_t sz = 1;
  struct Side {
    HullNode* full = nullptr;
    HullNode* fragA = nullptr;   // hidden suffix of the left child's hull
    HullNode* fragB1 = nullptr;  // hidden suffix of the left-plus-self hull
    HullNode* fragB2 = nullptr;  // hidden prefix of the right child's hull
    const ChainVertex* cutA = nullptr;  // bridge vertex closing the kept prefix
    const ChainVertex* cutB = nullptr;
  } up, lo;
  explicit Node(const ChainVertex& vv) : v(vv), pri(vpri(vv)) {}
};

void Chain::reassemble(Node* v) {
  v->sz = 1 + (v->l ? v->l->sz : 0) + (v->r ? v->r->sz : 0);
  for (int sign : {+1, -1}) {
    auto& s = sign > 0 ? v->up : v->lo;
    HullNode* HL = nullptr;
    HullNode* HR = nullptr;
    if (v->l) {
      auto& ls = sign > 0 ? v->l->up : v->l->lo;
      HL = ls.full;
      ls.full = nullptr;
    }
    if (v->r) {
      auto& rs = sign > 0 ? v->r->up : v->r->lo;
      HR = rs.full;
      rs.full = nullptr;
    }
    HullNode* sv = new HullNode(&v->v, vpri(v->v));
    HullNode* t1;
    if (HL) {
      auto [i, j] = hull::find_bridge(HL, sv, sign);
      (void)j;
      auto [keep, hidden] = hull::split(HL, i->pos.x, /*incl=*/true);
      s.fragA = hidden;
      s.cutA = i;
      t1 = hull::merge(keep, sv);
    } else {
      s.fragA = nullptr;
      t1 = sv;
    }
    if (HR) {
      auto [i, j] = hull::find_bridge(t1, HR, sign);
      auto [keep, hid1] = hull::split(t1, i->pos.x, /*incl=*/true);
      auto [hid2, tail] = hull::split(HR, j->pos.x, /*incl=*/false);
      s.fragB1 = hid1;
      s.fragB2 = hid2;
      s.cutB = i;
      s.full = hull::merge(keep, tail);
    } else {
      s.fragB1 = s.fragB2 = nullptr;
      s.full = t1;
    }
  }
}

void Chain::disassemble(Node* v) {
  for (int sign : {+1, -1}) {
    auto& s = sign > 0 ? v->up : v->lo;
    HullNode* h = s.full;
    s.full = nullptr;
    HullNode* t1;
    if (v->r) {
      auto& rs = sign > 0 ? v->r->up : v->r->lo;
      auto [left, tail] = hull::split(h, s.cutB->pos.x, /*incl=*/true);
      rs.full = hull::merge(s.fragB2, tail);
      s.fragB2 = nullptr;
      t1 = hull::merge(left, s.fragB1);
      s.fragB1 = nullptr;
    } else {
      t1 = h;
    }
    auto [rest, single] = hull::split(t1, v->v.pos.x, /*incl=*/false);
    assert(hull::size(single) == 1 && single->v == &v->v);
    hull::free_tree(single);
    if (v->l) {
      auto& ls = sign > 0 ? v->l->up : v->l->lo;
      ls.full = hull::merge(rest, s.fragA);
      s.fragA = nullptr;
    } else {
      assert(!rest);
    }
  }
}

Chain::Node* Chain::merge(Node* a, Node* b) {
  if (!a) return b;
  if (!b) return a;
  if (a->pri >= b->pri) {
    disassemble(a);
    a->r = merge(a->r, b);
    reassemble(a);
    return a;
  }
  disassemble(b);
  b->l = merge(a, b->l);
  reassemble(b);
  return b;
}

std::pair<Chain::Node*, Chain::Node*> Chain::split(Node* t, const Rat& x, bool incl) {
  if (!t) return {nullptr, nullptr};
  disassemble(t);
  int c = compare(t->v.pos.x, x);
  bool to_left = incl ? c <= 0 : c < 0;
  if (to_left) {
    auto [a, b] = split(t->r, x, incl);
    t->r = a;
    reassemble(t);
    return {t, b};
  }
  auto [a, b] = split(t->l, x, incl);
  t->l = b;
  reassemble(t);
  return {a, t};
}

std::size_t Chain::size() const { return root_ ? root_->sz : 0; }

std::pair<Chain, Chain> Chain::split_at(Chain&& c, const Rat& x) {
  assert(!c.vertex_at(x).has_value());
  PointId m = c.line_at(x);
  auto [a, b] = split(c.root_, x, true);
  c.root_ = nullptr;
  Chain L, R;
  L.root_ = a;
  L.left_line_ = c.left_line_;
  L.right_line_ = m;
  R.root_ = b;
  R.left_line_ = m;
  R.right_line_ = c.right_line_;
  return {std::move(L), std::move(R)};
}

std::pair<Chain, Chain> Chain::split_dropping_vertex(Chain&& c, const Rat& x) {
  auto mid = c.vertex_at(x);
  assert(mid.has_value());
  auto p = c.pred(x);
  auto s = c.succ(x);
  PointId enter = p ? common_line(*p, *mid) : c.left_line_;
  PointId exit = s ? common_line(*mid, *s) : c.right_line_;
  auto [a, rest] = split(c.root_, x, false);
  auto [m, b] = split(rest, x, true);
  c.root_ = nullptr;
  assert(m && m->sz == 1);
  free_rec(m);
  Chain L, R;
  L.root_ = a;
  L.left_line_ = c.left_line_;
  L.right_line_ = enter;
  R.root_ = b;
  R.left_line_ = exit;
  R.right_line_ = c.right_line_;
  return {std::move(L), std::move(R)};
}

Chain Chain::join(Chain&& a, Chain&& b) {
  assert(a.right_line_ == b.left_line_);
  Chain out;
  out.root_ = merge(a.root_, b.root_);
  out.left_line_ = a.left_line_;
  out.right_line_ = b.right_line_;
  a.root_ = nullptr;
  b.root_ = nullptr;
  return out;
}

Chain Chain::join_over(Chain&& a, const ChainVertex& v, Chain&& b) {
  assert(a.right_line_ == v.a || a.right_line_ == v.b);
  assert(b.left_line_ == v.a || b.left_line_ == v.b);
  assert(a.right_line_ != b.left_line_);
  Node* nv = new Node(v);
  reassemble(nv);
  Chain out;
  out.root_ = merge(merge(a.root_, nv), b.root_);
  out.left_line_ = a.left_line_;
  out.right_line_ = b.right_line_;
  a.root_ = nullptr;
  b.root_ = nullptr;
  return out;
}

std::optional<ChainVertex> Chain::pred(const Rat& x) const {
  const Node* t = root_;
  const Node* best = nullptr;
  while (t) {
    if (compare(t->v.pos.x, x) < 0) {
      best = t;
      t = t->r;
    } else {
      t = t->l;
    }
  }
  if (!best) return std::nullopt;
  return best->v;
}

std::optional<ChainVertex> Chain::succ(const Rat& x) const {
  const Node* t = root_;
  const Node* best = nullptr;
  while (t) {
    if (compare(t->v.pos.x, x) > 0) {
      best = t;
      t = t->l;
    } else {
      t = t->r;
    }
  }
  if (!best) return std::nullopt;
  return best->v;
}

std::optional<ChainVertex> Chain::vertex_at(const Rat& x) const {
  const Node* t = root_;
  while (t) {
    int c = compare(x, t->v.pos.x);
    if (c == 0) return t->v;
    t = c < 0 ? t->l : t->r;
  }
  return std::nullopt;
}

PointId Chain::line_at(const Rat& x) const {
  assert(!vertex_at(x).has_value());
  auto p = pred(x);
  auto s = succ(x);
  if (p && s) return common_line(*p, *s);
  if (p) return right_line_;
  if (s) return left_line_;
  return left_line_;
}

std::vector<ChainVertex> Chain::vertices() const {
  std::vector<ChainVertex> out;
  out.reserve(size());
  scan([&](const ChainVertex& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::vector<const ChainVertex*> Chain::hull(int sign) const {
  std::vector<const ChainVertex*> out;
  if (root_) hull::inorder(sign > 0 ? root_->up.full : root_->lo.full, out);
  return out;
}

void Chain::scan(const std::function<bool(const ChainVertex&)>& fn) const {
  struct W {
    const std::function<bool(const ChainVertex&)>& f;
    bool go = true;
    void walk(const Node* t) {
      if (!t || !go) return;
      walk(t->l);
      if (go && !f(t->v)) go = false;
      walk(t->r);
    }
  } w{fn};
  w.walk(root_);
}

Chain Chain::from_sorted(const std::vector<ChainVertex>& vs, PointId left_line,
                         PointId right_line) {
  Chain out;
  out.left_line_ = left_line;
  out.right_line_ = right_line;
  if (vs.empty()) return out;
  // Cartesian tree on priority over the x-sorted vertices, hulls bottom-up.
  std::vector<Node*> stack;
  for (const ChainVertex& v : vs) {
    Node* n = new Node(v);
    Node* last = nullptr;
    while (!stack.empty() && stack.back()->pri < n->pri) {
      last = stack.back();
      stack.pop_back();
    }
    n->l = last;
    if (!stack.empty()) stack.back()->r = n;
    stack.push_back(n);
  }
  out.root_ = stack.front();
  struct Init {
    static void run(Node* t) {
      if (!t) return;
      run(t->l);
      run(t->r);
      reassemble(t);
    }
  };
  Init::run(out.root_);
  return out;
}

void Chain::free_rec(Node* n) {
  if (!n) return;
  free_rec(n->l);
  free_rec(n->r);
  for (auto* s : {&n->up, &n->lo}) {
    hull::free_tree(s->full);
    hull::free_tree(s->fragA);
    hull::free_tree(s->fragB1);
    hull::free_tree(s->fragB2);
  }
  delete n;
}

void Chain::clear() {
  free_rec(root_);
  root_ = nullptr;
}

void Chain::steal(Chain& o) {
  root_ = o.root_;
  left_line_ = o.left_line_;
  right_line_ = o.right_line_;
  o.root_ = nullptr;
}

#ifdef DD_HEAVY_ASSERTS
void Chain::audit() const {
  std::vector<const ChainVertex*> ptrs;
  struct Collect {
    static void run(const Node* t, std::vector<const ChainVertex*>& out) {
      if (!t) return;
      run(t->l, out);
      out.push_back(&t->v);
      run(t->r, out);
    }
  };
  Collect::run(root_, ptrs);
  for (int sign : {+1, -1}) {
    auto want = hull::scan_hull(ptrs, sign);
    auto got = hull(sign);
    assert(want.size() == got.size());
    for (std::size_t i = 0; i < want.size(); ++i) assert(*want[i] == *got[i]);
  }
}
#endif

}  // namespace dd
