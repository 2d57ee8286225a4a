#include "depthcore/cover_engine.hpp"

#include <algorithm>
#include <cassert>

namespace dd {

namespace {

ChainVertex make_vertex(PointId i, const DualLine& li, PointId j, const DualLine& lj) {
  Pt pos = line_intersection(li, lj);
  if (i > j) std::swap(i, j);
  return ChainVertex{i, j, pos};
}

}  // namespace

PointId CoverEngine::insert(const Pt& q) {
  PointId id = ps_.insert(q);
  insert_line(id);
  return id;
}

void CoverEngine::erase(PointId id) {
  if (!ps_.contains(id)) throw DepthError(Errc::UnknownPoint, "erase: unknown id", id);
  remove_line(id);
  ps_.erase(id);
}

void CoverEngine::erase_at(const Pt& q) {
  auto id = ps_.find(q);
  if (!id) throw DepthError(Errc::UnknownPoint, "erase_at: no point at " + pt_str(q));
  erase(*id);
}

void CoverEngine::insert_line(PointId id) {
  DualLine t = dual_of_point(ps_.at(id));

  struct Crossing {
    Pt pos;
    PointId m;
    bool steeper;  // slope(m) > slope(t)
  };
  std::vector<Crossing> xs;
  xs.reserve(lines_.size());
  int nu = 1;
  for (const auto& [mid, ml] : lines_) {
    assert(ml.slope != t.slope);
    xs.push_back({line_intersection(t, ml), mid, ml.slope > t.slope});
    if (ml.slope < t.slope) ++nu;
  }
  std::sort(xs.begin(), xs.end(),
            [](const Crossing& a, const Crossing& b) { return a.pos.x < b.pos.x; });
  for (std::size_t i = 1; i < xs.size(); ++i) assert(xs[i - 1].pos.x < xs[i].pos.x);

  Chain cur(id);  // the chain currently ending with a piece of the new line
  for (const Crossing& c : xs) {
    int lam = nu - 1 + (c.steeper ? 1 : 0);
    Chain C = std::move(levels_.at(static_cast<std::size_t>(lam - 1)));
    auto [cl, cr] = Chain::split_at(std::move(C), c.pos.x);
    assert(cl.right_line() == c.m);
    ChainVertex v = make_vertex(id, t, c.m, lines_.at(c.m));
    levels_.at(static_cast<std::size_t>(lam - 1)) =
        Chain::join_over(std::move(cur), v, std::move(cr));
    Chain tail(id);
    cur = Chain::join_over(std::move(cl), v, std::move(tail));
    nu += c.steeper ? 1 : -1;
  }

  std::vector<Chain> next(levels_.size() + 1);
  for (std::size_t lam = 1; lam <= levels_.size(); ++lam) {
    std::size_t idx = lam + (static_cast<int>(lam) >= nu ? 1 : 0);
    next[idx - 1] = std::move(levels_[lam - 1]);
  }
  next[static_cast<std::size_t>(nu - 1)] = std::move(cur);
  levels_ = std::move(next);
  lines_.emplace(id, t);
}

void CoverEngine::remove_line(PointId id) {
  DualLine t = lines_.at(id);
  lines_.erase(id);

  struct Crossing {
    Pt pos;
    PointId m;
    bool steeper;
  };
  std::vector<Crossing> xs;
  xs.reserve(lines_.size());
  int nu = 1;
  for (const auto& [mid, ml] : lines_) {
    xs.push_back({line_intersection(t, ml), mid, ml.slope > t.slope});
    if (ml.slope < t.slope) ++nu;
  }
  std::sort(xs.begin(), xs.end(),
            [](const Crossing& a, const Crossing& b) { return a.pos.x < b.pos.x; });

  for (const Crossing& c : xs) {
    int nu2 = nu + (c.steeper ? 1 : -1);
    Chain U = std::move(levels_.at(static_cast<std::size_t>(nu - 1)));
    Chain W = std::move(levels_.at(static_cast<std::size_t>(nu2 - 1)));
    auto [ul, ur] = Chain::split_dropping_vertex(std::move(U), c.pos.x);
    auto [wl, wr] = Chain::split_dropping_vertex(std::move(W), c.pos.x);
    assert(ul.empty() && ul.left_line() == id);
    assert(ur.left_line() == c.m);
    assert(wl.right_line() == c.m);
    assert(wr.left_line() == id);
    levels_.at(static_cast<std::size_t>(nu - 1)) = Chain::join(std::move(wl), std::move(ur));
    levels_.at(static_cast<std::size_t>(nu2 - 1)) = std::move(wr);
    nu = nu2;
  }

  assert(levels_.at(static_cast<std::size_t>(nu - 1)).empty());
  std::vector<Chain> next(levels_.size() - 1);
  for (std::size_t lam = 1; lam <= levels_.size(); ++lam) {
    if (static_cast<int>(lam) == nu) continue;
    std::size_t idx = lam - (static_cast<int>(lam) > nu ? 1 : 0);
    next[idx - 1] = std::move(levels_[lam - 1]);
  }
  levels_ = std::move(next);
}

void CoverEngine::bulk_load(const std::vector<Pt>& pts) {
  assert(ps_.size() == 0);
  for (const Pt& p : pts) {
    PointId id = ps_.insert(p);
    lines_.emplace(id, dual_of_point(p));
  }
  std::size_t n = lines_.size();
  levels_.clear();
  if (n == 0) return;

  std::vector<std::pair<PointId, DualLine>> ls(lines_.begin(), lines_.end());
  std::vector<std::vector<ChainVertex>> per_level(n);
  for (std::size_t i = 0; i < n; ++i) {
    struct C {
      Rat x;
      std::size_t j;
    };
    std::vector<C> cs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      cs.push_back({line_intersection(ls[i].second, ls[j].second).x, j});
    }
    std::sort(cs.begin(), cs.end(), [](const C& a, const C& b) { return a.x < b.x; });
    int lev = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && ls[j].second.slope < ls[i].second.slope) ++lev;
    for (const C& c : cs) {
      per_level[static_cast<std::size_t>(lev - 1)].push_back(
          make_vertex(ls[i].first, ls[i].second, ls[c.j].first, ls[c.j].second));
      lev += (ls[c.j].second.slope < ls[i].second.slope) ? -1 : +1;
    }
  }

  std::vector<std::size_t> by_slope(n);
  for (std::size_t i = 0; i < n; ++i) by_slope[i] = i;
  std::sort(by_slope.begin(), by_slope.end(), [&](std::size_t a, std::size_t b) {
    return ls[a].second.slope < ls[b].second.slope;
  });

  levels_.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    auto& vs = per_level[l];
    std::sort(vs.begin(), vs.end(),
              [](const ChainVertex& a, const ChainVertex& b) { return a.pos.x < b.pos.x; });
    levels_[l] = Chain::from_sorted(vs, ls[by_slope[l]].first, ls[by_slope[n - 1 - l]].first);
  }
}

std::vector<Pt> CoverEngine::contour_candidates(std::size_t lvl, int sign) const {
  const Chain& chain = levels_.at(lvl - 1);
  auto slope_of = [&](PointId line) -> const Rat& { return lines_.at(line).slope; };

  // Line shared by two adjacent chain vertices (the piece between them).
  auto shared = [](const ChainVertex& x, const ChainVertex& y) -> PointId {
    if (x.a == y.a || x.a == y.b) return x.a;
    assert(x.b == y.a || x.b == y.b);
    return x.b;
  };
  // A vertex contributes a half-plane of the family iff the chain's slope
  // decreases through it (upper-hull side) or increases (lower-hull side).
  auto valid = [&](const ChainVertex& v) {
    auto p = chain.pred(v.pos.x);
    auto s = chain.succ(v.pos.x);
    PointId ent = p ? shared(*p, v) : chain.left_line();
    PointId ext = s ? shared(v, *s) : chain.right_line();
    int c = compare(slope_of(ent), slope_of(ext));
    assert(c != 0);
    return sign > 0 ? c > 0 : c < 0;
  };

  auto hv = chain.hull(sign);
  std::vector<Pt> out;
  if (hv.empty()) return out;

  // Strict-hull geometry makes every interior hull vertex valid; only the two
  // extremes can carry the wrong count, and dropping one exposes at most a
  // prefix (suffix) of chain vertices that a local scan repairs.
  std::size_t lo = 0, hi = hv.size();
  bool first_bad = !valid(*hv[0]);
  bool last_bad = hv.size() >= 2 ? !valid(*hv[hv.size() - 1]) : first_bad;
#ifdef DD_HEAVY_ASSERTS
  for (std::size_t i = 1; i + 1 < hv.size(); ++i) assert(valid(*hv[i]));
#endif

  if (hv.size() == 1) {
    if (!first_bad) return {hv[0]->pos};
    // fall back to a full scan of the chain's valid vertices
    std::vector<Pt> vs;
    chain.scan([&](const ChainVertex& v) {
      if (valid(v)) vs.push_back(v.pos);
      return true;
    });
    // hull of the valid set
    std::vector<Pt> h;
    for (const Pt& p : vs) {
      while (h.size() >= 2 && sign * orient(h[h.size() - 2], h.back(), p) >= 0) h.pop_back();
      h.push_back(p);
    }
    return h;
  }

  std::vector<Pt> prefix, suffix;
  if (first_bad) {
    lo = 1;
    const Pt& anchor = hv[1]->pos;
    std::vector<Pt> cand;
    chain.scan([&](const ChainVertex& v) {
      if (compare(v.pos.x, anchor.x) >= 0) return false;
      if (valid(v)) cand.push_back(v.pos);
      return true;
    });
    cand.push_back(anchor);
    std::vector<Pt> h;
    for (const Pt& p : cand) {
      while (h.size() >= 2 && sign * orient(h[h.size() - 2], h.back(), p) >= 0) h.pop_back();
      h.push_back(p);
    }
    h.pop_back();  // anchor re-added with the main run
    prefix = std::move(h);
  }
  if (last_bad && hi >= 2) {
    hi -= 1;
    const Pt& anchor = hv[hi - 1]->pos;
    std::vector<ChainVertex> tailv;
    chain.scan([&](const ChainVertex& v) {
      if (compare(v.pos.x, anchor.x) > 0 && valid(v)) tailv.push_back(v);
      return true;
    });
    std::vector<Pt> cand{anchor};
    for (auto& v : tailv) cand.push_back(v.pos);
    std::vector<Pt> h;
    for (const Pt& p : cand) {
      while (h.size() >= 2 && sign * orient(h[h.size() - 2], h.back(), p) >= 0) h.pop_back();
      h.push_back(p);
    }
    suffix.assign(h.begin() + 1, h.end());  // anchor comes from the main run
  }

  out = std::move(prefix);
  for (std::size_t i = lo; i < hi; ++i) out.push_back(hv[i]->pos);
  for (const Pt& p : suffix) out.push_back(p);
  return out;
}

Polygon CoverEngine::cover_contour(int k) const {
  int n = static_cast<int>(ps_.size());
  if (n == 0) throw DepthError(Errc::OutOfRange, "cover contour of empty set");
  if (k < 1 || k > (n + 1) / 2)
    throw DepthError(Errc::OutOfRange, "cover contour depth out of range");
  std::vector<std::pair<PointId, Pt>> pv(ps_.points().begin(), ps_.points().end());
  if (n == 1) return Polygon{Polygon::Kind::Point, {pv[0].second}};
  if (n == 2) {
    std::vector<Pt> seg{pv[0].second, pv[1].second};
    if (lex_less(seg[1], seg[0])) std::swap(seg[0], seg[1]);
    return Polygon{Polygon::Kind::Segment, std::move(seg)};
  }

  std::vector<Pt> down = contour_candidates(static_cast<std::size_t>(n - k + 1), +1);
  std::vector<Pt> up = contour_candidates(static_cast<std::size_t>(k), -1);
  if (down.empty() || up.empty()) return Polygon{};

  // Dual points become primal boundary lines; hull order gives them sorted
  // by slope. The down family bounds the region from above (its lower
  // envelope), the up family from below (its upper envelope).
  std::vector<DualLine> dl, ul;
  for (auto it = down.rbegin(); it != down.rend(); ++it)
    dl.push_back(DualLine{it->x, -it->y});  // slopes decreasing
  for (const Pt& h : up) ul.push_back(DualLine{h.x, -h.y});  // slopes increasing

  auto breakpoints = [](const std::vector<DualLine>& pieces) {
    std::vector<Pt> bp;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
      bp.push_back(line_intersection(pieces[i], pieces[i + 1]));
    for (std::size_t i = 1; i < bp.size(); ++i) assert(bp[i - 1].x < bp[i].x);
    return bp;
  };
  std::vector<Pt> dbp = breakpoints(dl), ubp = breakpoints(ul);

  // Both tails must sink (the region cannot be unbounded).
  if (!(dl.front().slope > ul.front().slope) || !(dl.back().slope < ul.back().slope))
    return Polygon{};

  // Sweep the merged breakpoints; h(x) = env_down(x) - env_up(x) is concave
  // piecewise linear, so {h >= 0} is one interval whose ends are the caps.
  std::vector<Pt> caps;
  std::size_t di = 0, ui = 0;
  bool more = true;
  Rat seg_lo;  // left end of the current segment; meaningless when unbounded
  bool has_lo = false;
  while (more) {
    Rat seg_hi;
    bool has_hi = true;
    bool adv_d = false, adv_u = false;
    if (di < dbp.size() && ui < ubp.size()) {
      int c = compare(dbp[di].x, ubp[ui].x);
      seg_hi = c <= 0 ? dbp[di].x : ubp[ui].x;
      adv_d = c <= 0;
      adv_u = c >= 0;
    } else if (di < dbp.size()) {
      seg_hi = dbp[di].x;
      adv_d = true;
    } else if (ui < ubp.size()) {
      seg_hi = ubp[ui].x;
      adv_u = true;
    } else {
      has_hi = false;
      more = false;
    }

    const DualLine& d = dl[di];
    const DualLine& u = ul[ui];
    Rat dm = d.slope - u.slope;
    Rat db = d.intercept - u.intercept;
    if (dm.sign() != 0) {
      Rat x0 = -db / dm;
      bool in_lo = !has_lo || x0 >= seg_lo;
      bool in_hi = !has_hi || x0 <= seg_hi;
      if (in_lo && in_hi) {
        Pt cap{x0, u.y_at(x0)};
        if (caps.empty() || !(caps.back() == cap)) caps.push_back(cap);
      }
    } else if (db.sign() == 0) {
      // The envelopes share a piece; with n >= 3 in general position this
      // cannot happen for a proper contour.
      assert(false && "coincident envelope pieces");
    }

    if (adv_d) ++di;
    if (adv_u) ++ui;
    if (has_hi) {
      seg_lo = seg_hi;
      has_lo = true;
    }
  }

  if (caps.size() < 2) {
    if (caps.size() == 1) {
      // tangency: a single deepest point
      return Polygon{Polygon::Kind::Point, {caps[0]}};
    }
    return Polygon{};
  }
  assert(caps.size() == 2);
  const Pt& cl = caps[0];
  const Pt& cr = caps[1];
  // Verify the region between the caps is nonempty (h > 0 inside).
  std::vector<Pt> ring{cl};
  for (const Pt& b : ubp)
    if (cl.x < b.x && b.x < cr.x) ring.push_back(b);
  ring.push_back(cr);
  for (auto it = dbp.rbegin(); it != dbp.rend(); ++it)
    if (cl.x < it->x && it->x < cr.x) ring.push_back(*it);
  return canonical_polygon(std::move(ring));
}

int CoverEngine::max_contour_depth() const {
  int n = static_cast<int>(ps_.size());
  for (int k = (n + 1) / 2; k >= 1; --k) {
    if (cover_contour(k).kind != Polygon::Kind::Empty) return k;
  }
  return 0;
}

}  // namespace dd
