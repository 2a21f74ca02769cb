#pragma once

#include <cmath>

#include "eqcc/dual.hpp"
#include "eqcc/geometry.hpp"
#include "eqcc/interval.hpp"

namespace eqcc::detail {

inline double nonneg(double x) { return x < 0.0 ? 0.0 : x; }
template <class T>
const T& nonneg(const T& x) {
  return x;
}

// -1, 0 or +1; 0 when the sign is not determined.
inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }
inline int sign_of(const Interval& x) { return x.positive() ? 1 : (x.negative() ? -1 : 0); }
template <class T>
int sign_of(const Dual<T>& x) {
  return sign_of(x.v);
}

// Everything F needs along the symmetric family, generic over the scalar
// (double, Interval, Dual<double>, Dual<Interval>) and the exponent type.
template <class T>
struct SymmetricTerms {
  T x3, y3;
  T d123, d124, d134, d135, d145, d345;
  T r13, r14, r35;
  T R13, R14, R35;
  T q35;  // (R35 - 1) * d345
};

template <class T, class E>
SymmetricTerms<T> symmetric_terms(const T& y4, const E& A, Branch branch) {
  using std::abs;
  using std::pow;
  using std::sqrt;

  const double sign = branch == Branch::A ? 1.0 : -1.0;
  const T u = sqr(y4);
  const T s = sqrt(nonneg(T(64.0 - 16.0 * sqr(u - 1.75))));
  const T denom = 4.0 * (4.0 * u + 1.0);

  SymmetricTerms<T> t;
  t.y3 = (8.0 * u * y4 + 2.0 * y4 + sign * s) / denom;
  t.x3 = (4.0 * u + 1.0 + sign * 2.0 * y4 * s) / denom;

  t.d123 = t.y3;
  t.d124 = y4;
  t.d134 = t.x3 * y4 + 0.5 * (y4 - t.y3);
  t.d145 = t.x3 * y4 - 0.5 * (y4 - t.y3);
  t.d135 = 2.0 * t.x3 * t.y3;
  t.d345 = 2.0 * t.x3 * (y4 - t.y3);

  t.r13 = sqrt(sqr(t.x3 + 0.5) + sqr(t.y3));
  t.r14 = sqrt(0.25 + u);
  t.r35 = 2.0 * abs(t.x3);

  const E e = -A;
  t.R13 = pow(t.r13, e);
  t.R14 = pow(t.r14, e);
  t.R35 = pow(t.r35, e);

  // d345 = sign(x3) r35 (y4 - y3), so R35 d345 is a single power of r35
  if (const int sx = sign_of(t.x3); sx != 0) {
    const E e1 = 1.0 - A;
    t.q35 = static_cast<double>(sx) * (y4 - t.y3) * (pow(t.r35, e1) - t.r35);
  } else {
    t.q35 = (t.R35 - 1.0) * t.d345;
  }
  return t;
}

template <class T>
T determinant_F(const SymmetricTerms<T>& t) {
  return (1.0 - t.R14) * t.q35 * t.d124 +
         (1.0 - t.R13) * t.d134 * ((t.R13 - t.R14) * t.d134 + (1.0 - t.R14) * t.d145);
}

template <class T, class E>
T symmetric_F(const T& y4, const E& A, Branch branch) {
  return determinant_F(symmetric_terms(y4, A, branch));
}

}  // namespace eqcc::detail
