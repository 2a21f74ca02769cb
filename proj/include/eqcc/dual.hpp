#pragma once

#include <cmath>

namespace eqcc {

inline double sqr(double x) { return x * x; }

// Forward-mode dual number v + d·ε. T is double or Interval.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(const T& value) : v(value), d(0.0) {}  // NOLINT: constants promote
  Dual(const T& value, const T& deriv) : v(value), d(deriv) {}

  static Dual variable(const T& value) { return Dual(value, T(1.0)); }

  Dual operator-() const { return {-v, -d}; }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const T q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
  }

  friend Dual operator+(const Dual& a, double s) { return {a.v + s, a.d}; }
  friend Dual operator+(double s, const Dual& a) { return {s + a.v, a.d}; }
  friend Dual operator-(const Dual& a, double s) { return {a.v - s, a.d}; }
  friend Dual operator-(double s, const Dual& a) { return {s - a.v, -a.d}; }
  friend Dual operator*(const Dual& a, double s) { return {a.v * s, a.d * s}; }
  friend Dual operator*(double s, const Dual& a) { return {s * a.v, s * a.d}; }
  friend Dual operator/(const Dual& a, double s) { return {a.v / s, a.d / s}; }
};

template <class T>
Dual<T> sqr(const Dual<T>& a) {
  return {sqr(a.v), 2.0 * a.v * a.d};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}

template <class T>
Dual<T> exp(const Dual<T>& a) {
  using std::exp;
  const T e = exp(a.v);
  return {e, e * a.d};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
  using std::log;
  return {log(a.v), a.d / a.v};
}

// a^e for a constant exponent e (double or Interval).
template <class T, class E>
Dual<T> pow(const Dual<T>& a, const E& e) {
  using std::pow;
  const T p = pow(a.v, e);
  return {p, e * (p / a.v) * a.d};
}

// a^e with both base and exponent carrying derivatives.
template <class T>
Dual<T> pow(const Dual<T>& a, const Dual<T>& e) {
  return exp(e * log(a));
}

inline Dual<double> abs(const Dual<double>& a) {
  return a.v < 0.0 ? -a : a;
}

}  // namespace eqcc
