#include "depthcore/geometry.hpp"

#include <cassert>
#include <cctype>

namespace dd {

std::optional<Rat> Rat::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
      size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
      if (i >= t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    if (!is_int(ns) || !is_int(ds)) return std::nullopt;
    mpz_class num{std::string(ns)}, den{std::string(ds)};
    if (den == 0) return std::nullopt;
    mpq_class q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return Rat(std::move(q));
  }
  // Decimal: [+-]?digits[.digits] with at least one digit somewhere.
  size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
  std::string digits;
  size_t frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  mpz_class num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  mpz_class den(1);
  for (size_t k = 0; k < frac_len; ++k) den *= 10;
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

// Scratch rationals reused across calls; GMP reuses their limb storage, which
// keeps the hot predicates allocation-free after warmup.
struct Scratch {
  mpq_t a, b, c, d;
  Scratch() {
    mpq_init(a);
    mpq_init(b);
    mpq_init(c);
    mpq_init(d);
  }
  ~Scratch() {
    mpq_clear(a);
    mpq_clear(b);
    mpq_clear(c);
    mpq_clear(d);
  }
};
thread_local Scratch scratch;

}  // namespace

int orient(const Pt& a, const Pt& b, const Pt& c) {
  Scratch& s = scratch;
  mpq_sub(s.a, b.x.raw().get_mpq_t(), a.x.raw().get_mpq_t());
  mpq_sub(s.b, c.y.raw().get_mpq_t(), a.y.raw().get_mpq_t());
  mpq_mul(s.a, s.a, s.b);
  mpq_sub(s.c, b.y.raw().get_mpq_t(), a.y.raw().get_mpq_t());
  mpq_sub(s.d, c.x.raw().get_mpq_t(), a.x.raw().get_mpq_t());
  mpq_mul(s.c, s.c, s.d);
  int r = mpq_cmp(s.a, s.c);
  return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

namespace {

// Octant-style class of a direction, ordered CCW starting at the positive
// x-axis: E=0, open NE=1, N=2, NW=3, W=4, SW=5, S=6, SE=7.
int angle_class(const Dir& d) {
  int sx = d.x.sign(), sy = d.y.sign();
  assert(sx != 0 || sy != 0);
  if (sy == 0) return sx > 0 ? 0 : 4;
  if (sy > 0) {
    if (sx > 0) return 1;
    return sx == 0 ? 2 : 3;
  }
  if (sx < 0) return 5;
  return sx == 0 ? 6 : 7;
}

}  // namespace

int cross_sign(const Dir& u, const Dir& v) {
  Scratch& s = scratch;
  mpq_mul(s.a, u.x.raw().get_mpq_t(), v.y.raw().get_mpq_t());
  mpq_mul(s.b, u.y.raw().get_mpq_t(), v.x.raw().get_mpq_t());
  int r = mpq_cmp(s.a, s.b);
  return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

int dot_sign(const Dir& u, const Dir& v) {
  Scratch& s = scratch;
  mpq_mul(s.a, u.x.raw().get_mpq_t(), v.x.raw().get_mpq_t());
  mpq_mul(s.b, u.y.raw().get_mpq_t(), v.y.raw().get_mpq_t());
  mpq_add(s.a, s.a, s.b);
  return mpq_sgn(s.a);
}

int cmp_angle(const Dir& u, const Dir& v) {
  int cu = angle_class(u), cv = angle_class(v);
  if (cu != cv) return cu < cv ? -1 : 1;
  if ((cu & 1) == 0) return 0;  // axis classes: same ray
  return -cross_sign(u, v);    // cross > 0 means u strictly before v
}

int offset_class(const Dir& base, const Dir& x) {
  int cs = cross_sign(base, x);
  if (cs > 0) return 1;
  if (cs < 0) return 3;
  return dot_sign(base, x) > 0 ? 0 : 2;
}

int cmp_angle_from(const Dir& base, const Dir& u, const Dir& v) {
  int hu = offset_class(base, u), hv = offset_class(base, v);
  if (hu != hv) return hu < hv ? -1 : 1;
  if (hu == 0 || hu == 2) return 0;
  return -cross_sign(u, v);
}

bool in_ccw_interval(const Dir& a, const Dir& b, const Dir& x, bool incl_a, bool incl_b) {
  if (same_ray(x, a)) return incl_a;
  if (same_ray(x, b)) return incl_b;
  if (same_ray(a, b)) return false;  // degenerate interval, x matches neither end
  // Strict interior: offset(x) strictly between 0 and offset(b).
  return cmp_angle_from(a, x, b) < 0;
}

Pt line_intersection(const DualLine& a, const DualLine& b) {
  assert(a.slope != b.slope);
  Rat x = (b.intercept - a.intercept) / (a.slope - b.slope);
  return Pt{x, a.y_at(x)};
}

std::string pt_str(const Pt& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

}  // namespace dd
