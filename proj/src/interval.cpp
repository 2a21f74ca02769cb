#include "eqcc/interval.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "eqcc/error.hpp"

namespace eqcc {

using namespace rounding;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// libm exp/log are faithful to within one ulp; two steps keep a margin.
double libm_down(double x) { return down(down(x)); }
double libm_up(double x) { return up(up(x)); }

double min4(double a, double b, double c, double d) { return std::min(std::min(a, b), std::min(c, d)); }
double max4(double a, double b, double c, double d) { return std::max(std::max(a, b), std::max(c, d)); }

double pos_pow_down(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r = mul_down(r, a);
  return r;
}

double pos_pow_up(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r = mul_up(r, a);
  return r;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw InvalidArgument("interval bounds out of order");
  }
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_), Unchecked{}};
}

Interval Interval::entire() { return {-kInf, kInf, Unchecked{}}; }

double Interval::mid() const {
  if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
  const double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

std::pair<Interval, Interval> Interval::bisect() const {
  const double m = mid();
  return {Interval(lo_, m, Unchecked{}), Interval(m, hi_, Unchecked{})};
}

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo_, b.lo_), add_up(a.hi_, b.hi_), Interval::Unchecked{}};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {sub_down(a.lo_, b.hi_), sub_up(a.hi_, b.lo_), Interval::Unchecked{}};
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo_ >= 0.0 && b.lo_ >= 0.0) {
    return {mul_down(a.lo_, b.lo_), mul_up(a.hi_, b.hi_), Interval::Unchecked{}};
  }
  return {min4(mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_), mul_down(a.hi_, b.lo_),
               mul_down(a.hi_, b.hi_)),
          max4(mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_), mul_up(a.hi_, b.lo_),
               mul_up(a.hi_, b.hi_)),
          Interval::Unchecked{}};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw OutOfDomain("division by an interval containing zero");
  }
  return {min4(div_down(a.lo_, b.lo_), div_down(a.lo_, b.hi_), div_down(a.hi_, b.lo_),
               div_down(a.hi_, b.hi_)),
          max4(div_up(a.lo_, b.lo_), div_up(a.lo_, b.hi_), div_up(a.hi_, b.lo_),
               div_up(a.hi_, b.hi_)),
          Interval::Unchecked{}};
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw EmptyInterval("intervals do not intersect");
  return {lo, hi};
}

Interval sqr(const Interval& x) {
  if (x.lo() >= 0.0) return {mul_down(x.lo(), x.lo()), mul_up(x.hi(), x.hi())};
  if (x.hi() <= 0.0) return {mul_down(x.hi(), x.hi()), mul_up(x.lo(), x.lo())};
  return {0.0, std::max(mul_up(x.lo(), x.lo()), mul_up(x.hi(), x.hi()))};
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return {0.0, std::max(-x.lo(), x.hi())};
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0.0) throw EmptyInterval("sqrt of a negative interval");
  return {sqrt_down(std::max(0.0, x.lo())), sqrt_up(x.hi())};
}

Interval exp(const Interval& x) {
  const double lo = std::exp(x.lo());
  const double hi = std::exp(x.hi());
  return {std::max(0.0, libm_down(lo)), std::isinf(hi) ? kInf : libm_up(hi)};
}

Interval log(const Interval& x) {
  if (!(x.lo() > 0.0)) throw OutOfDomain("log of an interval reaching zero");
  return {libm_down(std::log(x.lo())), libm_up(std::log(x.hi()))};
}

Interval pow(const Interval& x, int n) {
  if (n == 0) return 1.0;
  if (n < 0) return Interval(1.0) / pow(x, -n);
  if (n % 2 == 0) {
    const Interval m = abs(x);
    return {pos_pow_down(m.lo(), n), pos_pow_up(m.hi(), n)};
  }
  const double lo = x.lo() >= 0.0 ? pos_pow_down(x.lo(), n) : -pos_pow_up(-x.lo(), n);
  const double hi = x.hi() >= 0.0 ? pos_pow_up(x.hi(), n) : -pos_pow_down(-x.hi(), n);
  return {lo, hi};
}

Interval pow(const Interval& x, const Interval& e) {
  if (e.is_thin() && std::abs(e.lo()) <= 1024.0 && std::trunc(e.lo()) == e.lo()) {
    return pow(x, static_cast<int>(e.lo()));
  }
  if (!(x.lo() > 0.0)) throw OutOfDomain("real power of an interval reaching zero");
  return exp(e * log(x));
}

Interval pow(const Interval& x, double e) { return pow(x, Interval(e)); }

Dual<Interval> abs(const Dual<Interval>& a) {
  if (a.v.lo() >= 0.0) return a;
  if (a.v.hi() <= 0.0) return -a;
  return {abs(a.v), Interval::hull(a.d, -a.d)};
}

Dual<Dual<Interval>> abs(const Dual<Dual<Interval>>& a) {
  if (a.v.v.lo() >= 0.0) return a;
  if (a.v.v.hi() <= 0.0) return -a;
  throw OutOfDomain("abs of a second-order dual at a sign change");
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17) << '[' << x.lo() << ", " << x.hi() << ']';
  os.flags(flags);
  os.precision(prec);
  return os;
}

std::string to_string(const Interval& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

}  // namespace eqcc
