#include <doctest.h>

#include <random>

#include "eqcc/error.hpp"
#include "eqcc/geometry.hpp"
#include "oracles.hpp"

using namespace eqcc;
using doctest::Approx;

namespace {

PlanarConfiguration with(Point q3, Point q4 = {0, 0.3}, Point q5 = {-0.4, 0.8}) {
  return PlanarConfiguration({Point{-0.5, 0}, Point{0.5, 0}, q3, q4, q5});
}

}  // namespace

TEST_CASE("oriented area") {
  CHECK(oriented_area(with({0, 1}), 1, 2, 3) == Approx(1.0));
  CHECK(oriented_area(with({0.3, 0.2}, {0, 0.7}), 1, 2, 4) == Approx(0.7));
  const PlanarConfiguration pent(oracle::regular());
  CHECK(oriented_area(pent, 1, 3, 4) == Approx(oriented_area(pent, 1, 3, 5)).epsilon(1e-12));
  CHECK(oriented_area(pent, 1, 3, 4) ==
        Approx(oracle::tri(pent[1], pent[3], pent[4])).epsilon(1e-14));
  // antisymmetric under transposition
  CHECK(oriented_area(pent, 2, 4, 5) == Approx(-oriented_area(pent, 4, 2, 5)));
  CHECK_THROWS_AS(oriented_area(pent, 1, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(oriented_area(pent, 0, 2, 3), InvalidArgument);
}

TEST_CASE("mutual distances of the regular pentagon") {
  const auto md = mutual_distances(PlanarConfiguration(oracle::regular()));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(md.equilateral);
  REQUIRE(md.classes);
  CHECK(md.classes->r12() == Approx(1.0).epsilon(1e-14));
  for (double d : {md.classes->r13(), md.classes->r14(), md.classes->r24(), md.classes->r25(),
                   md.classes->r35()})
    CHECK(d == Approx(phi).epsilon(1e-13));
  // direct coordinate distance
  const auto p = oracle::regular();
  CHECK(md.table(2, 5) == Approx(oracle::dist(p[1], p[4])).epsilon(1e-15));
}

TEST_CASE("mutual distances: square shape, collinear chain, collision") {
  const auto sq = symmetric_coords(SymmetricShape(kSquareY4, Branch::A));
  const auto md = mutual_distances(sq);
  REQUIRE(md.classes);
  CHECK(md.classes->r14() == Approx(std::sqrt(2 - std::sqrt(3.0))).epsilon(1e-12));
  CHECK(md.classes->r35() == Approx(1.0).epsilon(1e-12));

  const PlanarConfiguration chain({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}, Point{4, 0}});
  CHECK(mutual_distances(chain).table(1, 3) == Approx(2.0));
  CHECK_FALSE(mutual_distances(chain).equilateral);

  CHECK_THROWS_AS(mutual_distances(with({0.5, 0}, {0, 1}, {-1, 1})), CollisionError);
}

TEST_CASE("cayley-menger against a Leibniz expansion") {
  const double s2 = std::sqrt(2.0);
  CHECK(std::abs(cayley_menger({1, s2, 1, 1, s2, 1})) < 1e-12);
  CHECK(cayley_menger({1, 1, 1, 1, 1, 1}) == Approx(4.0));
  CHECK(oracle::cm_leibniz({1, 1, 1, 1, 1, 1}) == Approx(4.0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int t = 0; t < 200; ++t) {
    std::array<double, 6> d{};
    for (auto& x : d) x = u(rng);
    CHECK(cayley_menger(d) == Approx(oracle::cm_leibniz(d)).epsilon(1e-10));
  }
}

TEST_CASE("cayley-menger vanishes on planar points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 500; ++t) {
    std::array<Point, 5> p{};
    for (auto& q : p) q = {u(rng), u(rng)};
    const auto md = mutual_distances(PlanarConfiguration(p));
    const double scale = std::pow(md.table.max_offdiagonal(), 8);
    CHECK(std::abs(cayley_menger(md.table, 1, 2, 3, 4)) <= 1e-10 * scale);
    CHECK(std::abs(cayley_menger(md.table, 2, 3, 4, 5)) <= 1e-10 * scale);
  }
}

TEST_CASE("symmetric coordinates at notable parameters") {
  const auto sq = symmetric_coords(SymmetricShape(kSquareY4, Branch::A));
  CHECK(sq[3].x == Approx(0.5).epsilon(1e-12));
  CHECK(sq[3].y == Approx(1.0).epsilon(1e-12));

  const auto col = symmetric_coords(SymmetricShape(kCollinearY4, Branch::A));
  CHECK(std::abs(oriented_area(col, 1, 3, 4)) < 1e-12);

  const auto pent = symmetric_coords(SymmetricShape(kPentagonY4, Branch::A));
  const double c36 = std::cos(oracle::kPi / 5), s72 = std::sin(2 * oracle::kPi / 5);
  CHECK(pent[3].x == Approx(c36).epsilon(1e-12));   // 0.809017
  CHECK(pent[3].y == Approx(s72).epsilon(1e-12));   // 0.951057
  CHECK(pent[5].x == Approx(-c36).epsilon(1e-12));
  CHECK(kPentagonY4 == Approx(1.538842).epsilon(1e-6));

  CHECK_THROWS_AS(SymmetricShape(kMaxY4 + 1e-6, Branch::A), OutOfDomain);
  CHECK_THROWS_AS(SymmetricShape(-0.1, Branch::B), OutOfDomain);
}

TEST_CASE("symmetric family is equilateral and mirror symmetric along both branches") {
  for (Branch b : {Branch::A, Branch::B}) {
    for (int k = 1; k < 400; ++k) {
      const double y4 = kMaxY4 * k / 400.0;
      PlanarConfiguration c;
      try {
        c = symmetric_coords(SymmetricShape(y4, b));
      } catch (const OutOfDomain&) {
        continue;
      }
      CHECK(c.is_normalized());
      const auto& p = c.points();
      for (int i = 0; i < 5; ++i) CHECK(oracle::dist(p[i], p[(i + 1) % 5]) == Approx(1.0).epsilon(1e-9));
      CHECK(p[2].x == Approx(-p[4].x));
      CHECK(p[2].y == Approx(p[4].y));
      CHECK(p[3].x == 0.0);
    }
  }
}

TEST_CASE("closure from chain angles") {
  const auto pent = cyclic_from_angles({3 * oracle::kPi / 5, 3 * oracle::kPi / 5, Closure::Plus});
  const auto md = mutual_distances(pent);
  CHECK(md.equilateral);
  REQUIRE(md.classes);
  for (int c = 1; c < 6; ++c) CHECK(md.classes->values()[c] == Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(is_convex_polygon(pent));

  // pentagram-compatible closure: one of the two closures gives the star
  int stars = 0;
  for (Closure cl : {Closure::Plus, Closure::Minus}) {
    const auto s = cyclic_from_angles({oracle::kPi / 5, oracle::kPi / 5, cl});
    const auto sd = mutual_distances(s);
    REQUIRE(sd.classes);
    const auto& v = sd.classes->values();
    if (std::all_of(v.begin() + 1, v.end(), [](double d) { return d < 1.0; })) ++stars;
  }
  CHECK(stars >= 1);

  CHECK_FALSE(closure_feasible({oracle::kPi, oracle::kPi, Closure::Plus}));
  CHECK_THROWS_AS(cyclic_from_angles({oracle::kPi, oracle::kPi, Closure::Plus}), OutOfDomain);
}

TEST_CASE("vertex angles round-trip through the closure") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 2 * oracle::kPi - 0.1);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const ChainAngles a{u(rng), u(rng), t % 2 ? Closure::Plus : Closure::Minus};
    if (!closure_feasible(a)) continue;
    const auto c = cyclic_from_angles(a);
    CHECK(vertex_angle(c, 2) == Approx(a.theta12).epsilon(1e-9));
    CHECK(vertex_angle(c, 3) == Approx(a.theta23).epsilon(1e-9));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("polygon helpers") {
  const PlanarConfiguration pent(oracle::regular());
  const double side = 1.0, apothem = 0.5 / std::tan(oracle::kPi / 5);
  CHECK(signed_area(pent) == Approx(2.5 * side * apothem));
  CHECK(signed_area(mirrored(pent)) == Approx(-signed_area(pent)));
  CHECK(signed_area(scaled(pent, 3.0)) == Approx(9 * signed_area(pent)));
  CHECK(is_convex_polygon(pent));
  CHECK(hull_vertex_count(pent) == 5);
  CHECK_FALSE(interior_point(pent));

  const PlanarConfiguration dart({Point{-1, 0}, Point{1, 0}, Point{1, 2}, Point{0, 0.5}, Point{-1, 2}});
  CHECK(hull_vertex_count(dart) == 4);
  REQUIRE(interior_point(dart));
  CHECK(*interior_point(dart) == 4);
  CHECK_FALSE(is_convex_polygon(dart));

  // relabeling: old label i lands at i + 1
  const auto r = relabeled(dart, 1);
  for (int i = 1; i <= 5; ++i) {
    CHECK(r[i % 5 + 1].x == dart[i].x);
    CHECK(r[i % 5 + 1].y == dart[i].y);
  }
}

TEST_CASE("distance classes realize back to the same shape") {
  for (double y4 : {0.3, kSquareY4, 1.0, kPentagonY4, 1.8}) {
    const auto c = symmetric_coords(SymmetricShape(y4, Branch::A));
    const auto md = mutual_distances(c);
    REQUIRE(md.classes);
    const auto back = mutual_distances(realize_distance_classes(*md.classes));
    REQUIRE(back.classes);
    for (int k = 0; k < 6; ++k)
      CHECK(back.classes->values()[k] == Approx(md.classes->values()[k]).epsilon(1e-9));
  }
  CHECK_THROWS_AS(realize_distance_classes(DistanceVector({1, 5, 1, 1, 1, 1})), OutOfDomain);
  CHECK_THROWS_AS(DistanceVector({1, 0, 1, 1, 1, 1}), InvalidArgument);
}

TEST_CASE("sign types") {
  const double mid_a2 = 0.5 * (kSquareY4 + kCollinearY4);
  CHECK(classify_sign_type(SymmetricShape(mid_a2, Branch::A)).name() == "A2");
  CHECK(classify_sign_type(SymmetricShape(kPentagonY4, Branch::A)).name() == "A4");
  CHECK(classify_sign_type(SymmetricShape(kSquareY4, Branch::A)).is_boundary());

  // regular star in the symmetric family: find it on branch B by its distances
  bool found_b2 = false;
  for (int k = 1; k < 4000 && !found_b2; ++k) {
    const double y4 = kMaxY4 * k / 4000.0;
    try {
      const SymmetricShape s(y4, Branch::B);
      const auto md = mutual_distances(symmetric_coords(s));
      if (!md.classes) continue;
      const double target = 1 / ((1 + std::sqrt(5.0)) / 2);
      if (std::abs(md.classes->r13() - target) < 2e-3 && std::abs(md.classes->r35() - target) < 2e-3)
        found_b2 = classify_sign_type(s).name() == "B2";
    } catch (const OutOfDomain&) {
    }
  }
  CHECK(found_b2);

  CHECK(parse_sign_type("B4") == SignType::Kind::B4);
  CHECK_THROWS(parse_sign_type("C1"));
}
