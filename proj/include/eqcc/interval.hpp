#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>

#include "eqcc/dual.hpp"

namespace eqcc {

// Directed-rounding primitives. Each returns a bound on the exact result of
// the named operation on two doubles, using error-free transforms to decide
// whether the rounded value already lies on the correct side.
namespace rounding {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline double two_sum_err(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_err(a, b, s) < 0.0 ? down(s) : s;
}
inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_err(a, b, s) > 0.0 ? up(s) : s;
}
inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

// Underflowing products lose the fma residual, so nudge whenever the product
// is tiny.
inline bool tiny(double p) { return std::abs(p) < 1e-290; }

inline double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (tiny(p)) return (a == 0.0 || b == 0.0) ? 0.0 : down(p);
  return std::fma(a, b, -p) < 0.0 ? down(p) : p;
}
inline double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (tiny(p)) return (a == 0.0 || b == 0.0) ? 0.0 : up(p);
  return std::fma(a, b, -p) > 0.0 ? up(p) : p;
}

// exact a/b = q + r/b with r = a - q*b computed exactly by fma.
inline double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (tiny(q)) return a == 0.0 ? 0.0 : down(q);
  const double r = std::fma(-q, b, a);
  return (r != 0.0 && ((r < 0.0) != (b < 0.0))) ? down(q) : q;
}
inline double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (tiny(q)) return a == 0.0 ? 0.0 : up(q);
  const double r = std::fma(-q, b, a);
  return (r != 0.0 && ((r < 0.0) == (b < 0.0))) ? up(q) : q;
}

inline double sqrt_down(double x) {
  if (x <= 0.0) return 0.0;
  const double s = std::sqrt(x);
  return std::fma(-s, s, x) < 0.0 ? down(s) : s;
}
inline double sqrt_up(double x) {
  if (x <= 0.0) return 0.0;
  const double s = std::sqrt(x);
  return std::fma(-s, s, x) > 0.0 ? up(s) : s;
}

}  // namespace rounding

class Interval {
 public:
  Interval() = default;
  Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: thin intervals promote implicitly
  Interval(double lo, double hi);

  static Interval hull(double a, double b) { return a <= b ? Interval(a, b) : Interval(b, a); }
  static Interval hull(const Interval& a, const Interval& b);
  static Interval entire();

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const { return hi_ - lo_; }
  double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool positive() const { return lo_ > 0.0; }
  bool negative() const { return hi_ < 0.0; }
  bool is_thin() const { return lo_ == hi_; }

  std::pair<Interval, Interval> bisect() const;

  Interval operator-() const { return {-hi_, -lo_, Unchecked{}}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  struct Unchecked {};
  Interval(double lo, double hi, Unchecked) : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Throws EmptyInterval when a and b are disjoint.
Interval intersect(const Interval& a, const Interval& b);

Interval sqr(const Interval& x);
Interval abs(const Interval& x);
// sqrt over x ∩ [0, ∞); EmptyInterval when x < 0 entirely.
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
// OutOfDomain unless x > 0.
Interval log(const Interval& x);
Interval pow(const Interval& x, int n);
// x^e: integer power when e is a thin integer, otherwise exp(e·log x).
Interval pow(const Interval& x, const Interval& e);
Interval pow(const Interval& x, double e);

Dual<Interval> abs(const Dual<Interval>& a);
// OutOfDomain when the value straddles zero.
Dual<Dual<Interval>> abs(const Dual<Dual<Interval>>& a);

std::ostream& operator<<(std::ostream& os, const Interval& x);
std::string to_string(const Interval& x);

}  // namespace eqcc
