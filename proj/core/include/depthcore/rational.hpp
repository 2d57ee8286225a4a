#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace dd {

// Exact rational scalar. mpq_class keeps the canonical form (denominator > 0,
// gcd(|num|, den) = 1) after every arithmetic operation; nothing here ever
// rounds.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                       // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<long>(n)) {}   // NOLINT
  Rat(long long n) { v_ = mpq_class(make_int(n)); }  // NOLINT
  Rat(long long num, long long den) {
    v_.get_num() = make_int(num);
    v_.get_den() = make_int(den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(mpq_class&& q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "3", "-7/4", "1.25", "+.5". Decimal digits convert exactly
  // (no float round-trip). Returns nullopt on malformed input.
  static std::optional<Rat> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ / b.v_)); }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend int compare(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_); }

 private:
  static mpz_class make_int(long long n) {
    // mpz_class has no long long constructor on LP64-agnostic paths; go via string
    // only when the value does not fit in a long.
    if (n >= static_cast<long long>(-0x7fffffffL) && n <= static_cast<long long>(0x7fffffffL))
      return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
  }

  mpq_class v_;
};

}  // namespace dd
