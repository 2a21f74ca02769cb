#include <doctest.h>

#include "eqcc/error.hpp"
#include "eqcc/symmetric.hpp"
#include "oracles.hpp"

using namespace eqcc;
using doctest::Approx;

namespace {

// F straight from coordinates: closed form with R = r^-A.
double F_oracle(double y4, double A, Branch b) {
  const auto c = symmetric_coords(SymmetricShape(y4, b));
  const auto& p = c.points();
  auto R = [&](int i, int j) { return std::pow(oracle::dist(p[i - 1], p[j - 1]), -A); };
  auto D = [&](int i, int j, int k) { return oracle::tri(p[i - 1], p[j - 1], p[k - 1]); };
  const double R13 = R(1, 3), R14 = R(1, 4), R35 = R(3, 5);
  return (1 - R14) * (R35 - 1) * D(1, 2, 4) * D(3, 4, 5) +
         (1 - R13) * D(1, 3, 4) * ((R13 - R14) * D(1, 3, 4) + (1 - R14) * D(1, 4, 5));
}

}  // namespace

TEST_CASE("F endpoint signs and the pentagon root") {
  for (double A : {2.0, 3.0, 4.0}) {
    CHECK(symmetric_F(kSquareY4, A, Branch::A) > 0.0);
    CHECK(symmetric_F(kCollinearY4, A, Branch::A) < 0.0);
    CHECK(std::abs(symmetric_F(kPentagonY4, A, Branch::A)) < 1e-10);
  }
  CHECK_THROWS_AS(symmetric_F(kMaxY4 + 0.01, 3.0, Branch::A), OutOfDomain);
  CHECK_THROWS_AS(symmetric_F(1.0, 1.0, Branch::A), InvalidArgument);
}

TEST_CASE("F agrees with the coordinate closed form and the matrix minor") {
  int sign_plus = 0, sign_minus = 0;
  for (Branch b : {Branch::A, Branch::B})
    for (int k = 1; k < 300; ++k) {
      const double y4 = kMaxY4 * k / 300.0;
      for (double A : {2.0, 3.3, 5.0}) {
        double F;
        try {
          F = symmetric_F(y4, A, b);
        } catch (const OutOfDomain&) {
          continue;
        }
        const SymmetricShape s(y4, b);
        CHECK(F == Approx(F_oracle(y4, A, b)).epsilon(1e-10).scale(1.0));
        // rows L14 and L34, columns m1 and m3
        const MassMatrix M = mass_coefficient_matrix(s, A);
        const double minor = M(1, 0) * M(3, 1) - M(1, 1) * M(3, 0);
        const double scale = std::max({1.0, std::abs(F), std::abs(minor)});
        if (std::abs(F - minor) <= 1e-13 * scale) ++sign_plus;
        else if (std::abs(F + minor) <= 1e-13 * scale) ++sign_minus;
        else FAIL_CHECK("minor mismatch at y4=" << y4 << " A=" << A);
      }
    }
  CHECK((sign_plus == 0 || sign_minus == 0));
}

TEST_CASE("dual derivative against central differences") {
  double worst = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double y4 = 0.02 + (kMaxY4 - 0.04) * k / 200.0;
    for (double A : {2.0, 3.0, 4.5}) {
      double dF;
      try {
        dF = symmetric_F_dF(y4, A, Branch::A).second;
      } catch (const OutOfDomain&) {
        continue;
      }
      const double h = 1e-6;
      const double fd = (symmetric_F(y4 + h, A, Branch::A) - symmetric_F(y4 - h, A, Branch::A)) / (2 * h);
      if (std::abs(dF) < 1e-3) continue;
      worst = std::max(worst, std::abs(dF - fd) / std::abs(dF));
    }
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("thin-interval F is consistent with the float evaluation") {
  for (double y4 : {0.2, kSquareY4, 0.9, kPentagonY4, 1.8})
    for (double A : {2.0, 2.5, 4.0}) {
      const Interval e = symmetric_F_enclosure(y4, Interval(A), Branch::A);
      const double f = symmetric_F(y4, A, Branch::A);
      CHECK(e.lo() <= f + 1e-14);
      CHECK(f - 1e-14 <= e.hi());
      CHECK(e.width() < 1e-12);
    }
  for (double A : {2.0, 2.5, 3.0, 4.0, 6.0}) {
    CHECK(symmetric_F_enclosure(kSquareY4, Interval(A), Branch::A).positive());
    CHECK(symmetric_F_enclosure(kCollinearY4, Interval(A), Branch::A).negative());
  }
}

TEST_CASE("sign type windows") {
  const auto& a2 = sign_type_window(SignType::Kind::A2);
  CHECK(a2.lo == Approx(kSquareY4).epsilon(1e-12));
  CHECK(a2.hi == Approx(kCollinearY4).epsilon(1e-12));
  const auto& a4 = sign_type_window(SignType::Kind::A4);
  CHECK(a4.lo < kPentagonY4);
  CHECK(kPentagonY4 < a4.hi);
  for (Branch b : {Branch::A, Branch::B}) {
    const auto& ws = sign_type_windows(b);
    for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1].hi <= ws[i].lo);
    for (const auto& w : ws) {
      const double mid = 0.5 * (w.lo + w.hi);
      CHECK(classify_sign_type(SymmetricShape(mid, b)).kind == w.kind);
    }
  }
  const Interval open = a2.open(1e-9);
  CHECK(open.lo() >= a2.lo);
  CHECK(open.hi() <= a2.hi);
}

TEST_CASE("root isolation") {
  const auto a2 = isolate_roots(Branch::A, 2.0, sign_type_window(SignType::Kind::A2).open(1e-9));
  REQUIRE(a2.roots.size() == 1);
  REQUIRE(a2.roots[0].masses);
  CHECK((*a2.roots[0].masses)(4) == Approx(0.34199).epsilon(1e-4 / 0.34199));
  CHECK(std::abs((*a2.roots[0].masses)(3) - 2.32) < 2e-2);
  CHECK(a2.roots[0].positive);
  CHECK(a2.roots[0].la_residual < 1e-9);

  const Interval a4w = sign_type_window(SignType::Kind::A4).open(1e-9);
  CHECK(isolate_roots(Branch::A, 3.0, a4w).roots.size() == 1);
  const auto four = isolate_roots(Branch::A, 4.0, a4w);
  CHECK(four.roots.size() == 3);
  for (const auto& r : four.roots) CHECK(r.la_residual < 1e-9);

  // counts stable under tolerance refinement
  for (double A : {2.0, 3.0, 4.0}) {
    IsolationOptions coarse, fine;
    coarse.tol = 1e-10;
    fine.tol = 1e-11;
    for (Branch b : {Branch::A, Branch::B})
      for (const auto& w : sign_type_windows(b)) {
        const Interval win = w.open(1e-9);
        if (win.width() <= 0) continue;
        CHECK(isolate_roots(b, A, win, coarse).roots.size() ==
              isolate_roots(b, A, win, fine).roots.size());
      }
  }
}

TEST_CASE("mass polynomials") {
  const auto v = MassPolynomial::vortex();
  CHECK(v.degree() == 9);
  CHECK(v.coefficients().back() == -17);
  CHECK(verify_mass_polynomial(v, 0.0) == Approx(1.0));
  CHECK(MassPolynomial::a4_case().degree() == 16);

  const auto a2 = isolate_roots(Branch::A, 2.0, sign_type_window(SignType::Kind::A2).open(1e-9));
  REQUIRE(a2.roots.size() == 1);
  CHECK(verify_mass_polynomial(v, (*a2.roots[0].masses)(4)) < 1e-6);
}

TEST_CASE("bifurcation") {
  CHECK(a4_root_count(3.0) == 1);
  CHECK(a4_root_count(3.3) == 3);
  CHECK_THROWS_AS(bifurcation_scan(Interval(2.0, 3.0), 0.05), NoBifurcationFound);
  const auto b = bifurcation_scan(Interval(3.0, 3.3), 0.01, 1e-7);
  CHECK(std::abs(b.A_c.mid() - 3.12036856) < 1e-3);
  CHECK(b.count_below == 1);
  CHECK(b.count_above == 3);
  CHECK(std::abs(b.F_at) < 1e-10);
}

TEST_CASE("sign type exclusions") {
  for (double A : {2.0, 3.0})
    for (Branch b : {Branch::A, Branch::B})
      for (const auto& e : exclude_sign_types(b, A, 2000)) {
        CHECK(e.holds());
        CHECK(e.points > 0);
      }
  // A1/A2 boundary r35 = 1 itself
  const MassMatrix M = mass_coefficient_matrix(SymmetricShape(kSquareY4, Branch::A), 2.0);
  CHECK(M(0, 2) < 0.0);
}
