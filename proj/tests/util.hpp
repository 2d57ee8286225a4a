#pragma once

#include <random>
#include <vector>

#include "depthcore/oracle.hpp"
#include "depthcore/point_set.hpp"

namespace ddtest {

using namespace dd;

// Deterministic general-position point generator (rejection sampling against
// the full validator).
class Gen {
 public:
  explicit Gen(std::uint64_t seed, long long range = 1000) : rng_(seed), range_(range) {}

  Pt raw_pt() {
    std::uniform_int_distribution<long long> d(-range_, range_);
    return Pt{Rat(d(rng_)), Rat(d(rng_))};
  }

  // A point that keeps `ps` in general position (and distinct-x if ps demands).
  Pt fresh_pt(const PointSet& ps) {
    for (;;) {
      Pt p = raw_pt();
      if (!ps.check_insert(p)) return p;
    }
  }

  std::vector<Pt> general_position(int n, bool distinct_x = false) {
    PointSet ps(distinct_x, Validation::Full);
    std::vector<Pt> out;
    while (static_cast<int>(out.size()) < n) {
      Pt p = fresh_pt(ps);
      ps.insert(p);
      out.push_back(p);
    }
    return out;
  }

  // Integer-snapped bivariate normal-ish sample (Box-Muller over the seeded
  // engine), kept in general position by rejection.
  std::vector<Pt> normal_sample(int n, bool distinct_x = false, double sigma = 2.0,
                                long long scale = 1000) {
    PointSet ps(distinct_x, Validation::Full);
    std::vector<Pt> out;
    while (static_cast<int>(out.size()) < n) {
      double u1 = next_unit();
      double u2 = next_unit();
      double r = std::sqrt(-2.0 * std::log(u1 <= 0 ? 1e-12 : u1));
      double gx = r * std::cos(6.283185307179586 * u2);
      double gy = r * std::sin(6.283185307179586 * u2);
      Pt p{Rat(static_cast<long long>(gx * sigma * static_cast<double>(scale))),
           Rat(static_cast<long long>(gy * sigma * static_cast<double>(scale)))};
      if (ps.check_insert(p)) continue;
      ps.insert(p);
      out.push_back(p);
    }
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  double next_unit() {
    return static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
  }
  std::mt19937_64 rng_;
  long long range_;
};

// Direct recount of one meaningful half-plane: points in the closed half
// right of `v` anchored at `p` (anchor included).
inline int brute_half_count(const PointSet& ps, PointId anchor, const Dir& v) {
  const Pt& p = ps.at(anchor);
  int cnt = 1;
  for (const auto& [id, r] : ps.points()) {
    if (id == anchor) continue;
    if (cross_sign(v, dir_between(p, r)) <= 0) ++cnt;
  }
  return cnt;
}

}  // namespace ddtest
