#include "eqcc/geometry.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "eqcc/error.hpp"

namespace eqcc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_label(int label) {
  if (label < 1 || label > 5) {
    throw InvalidArgument("label out of range 1..5: " + std::to_string(label));
  }
}

int wrap_label(int label) { return ((label - 1) % 5 + 5) % 5 + 1; }

// Intersection of circles |p - a| = da, |p - b| = db with a = (-c, 0),
// b = (c, 0); returns the solution with y >= 0 and reports y^2.
Point axis_circle_intersection(double c, double da, double db, double& y_squared) {
  const double x = (da * da - db * db) / (4.0 * c);
  y_squared = da * da - (x + c) * (x + c);
  return {x, std::sqrt(std::max(0.0, y_squared))};
}

// Andrew's monotone chain, strict (collinear points dropped).
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool strictly_inside(const std::vector<Point>& ccw_hull, Point p) {
  if (ccw_hull.size() < 3) return false;
  for (std::size_t i = 0; i < ccw_hull.size(); ++i) {
    const Point a = ccw_hull[i];
    const Point b = ccw_hull[(i + 1) % ccw_hull.size()];
    if (cross(b - a, p - a) <= 0.0) return false;
  }
  return true;
}

}  // namespace

PlanarConfiguration PlanarConfiguration::normalized(const std::array<Point, 5>& points) {
  using C = std::complex<double>;
  const C z1(points[0].x, points[0].y);
  const C z2(points[1].x, points[1].y);
  const C span = z2 - z1;
  if (std::abs(span) == 0.0) throw CollisionError("q1 and q2 coincide");
  const C mid = 0.5 * (z1 + z2);
  std::array<Point, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const C w = (C(points[i].x, points[i].y) - mid) / span;
    out[i] = {w.real(), w.imag()};
  }
  out[0] = {-0.5, 0.0};
  out[1] = {0.5, 0.0};
  return PlanarConfiguration(out);
}

const Point& PlanarConfiguration::operator[](int label) const {
  check_label(label);
  return points_[label - 1];
}

bool PlanarConfiguration::is_normalized(double tol) const {
  return std::abs(points_[0].x + 0.5) <= tol && std::abs(points_[0].y) <= tol &&
         std::abs(points_[1].x - 0.5) <= tol && std::abs(points_[1].y) <= tol;
}

double oriented_area(const PlanarConfiguration& config, int i, int j, int k) {
  check_label(i);
  check_label(j);
  check_label(k);
  if (i == j || j == k || i == k) {
    throw InvalidArgument("oriented_area needs distinct labels");
  }
  const Point qi = config[i];
  return cross(qi - config[j], qi - config[k]);
}

DistanceClass distance_class(int i, int j) {
  check_label(i);
  check_label(j);
  if (i == j) throw InvalidArgument("distance class of a repeated label");
  if (i > j) std::swap(i, j);
  if (j - i == 1 || (i == 1 && j == 5)) return DistanceClass::R12;
  if (i == 1 && j == 3) return DistanceClass::R13;
  if (i == 1 && j == 4) return DistanceClass::R14;
  if (i == 2 && j == 4) return DistanceClass::R24;
  if (i == 2 && j == 5) return DistanceClass::R25;
  return DistanceClass::R35;
}

DistanceVector::DistanceVector(const std::array<double, 6>& values) : values_(values) {
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument("distance classes must be finite and strictly positive");
    }
  }
}

double DistanceTable::operator()(int i, int j) const {
  check_label(i);
  check_label(j);
  return d_[i - 1][j - 1];
}

void DistanceTable::set(int i, int j, double value) {
  check_label(i);
  check_label(j);
  d_[i - 1][j - 1] = value;
  d_[j - 1][i - 1] = value;
}

double DistanceTable::min_offdiagonal() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) m = std::min(m, d_[i][j]);
  return m;
}

double DistanceTable::max_offdiagonal() const {
  double m = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) m = std::max(m, d_[i][j]);
  return m;
}

DistanceTable DistanceTable::from_classes(const DistanceVector& classes) {
  DistanceTable t;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) t.set(i, j, classes[distance_class(i, j)]);
  return t;
}

MutualDistances mutual_distances(const PlanarConfiguration& config, double equilateral_tol) {
  MutualDistances out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) out.table.set(i, j, norm(config[i] - config[j]));

  const double dmax = out.table.max_offdiagonal();
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      if (!(out.table(i, j) > 1e-12 * dmax)) {
        throw CollisionError("bodies " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide");
      }
    }
  }

  const std::array<double, 5> edges = {out.table(1, 2), out.table(2, 3), out.table(3, 4),
                                       out.table(4, 5), out.table(1, 5)};
  const auto [emin, emax] = std::minmax_element(edges.begin(), edges.end());
  double mean = 0.0;
  for (double e : edges) mean += e / 5.0;
  out.edge_spread = (*emax - *emin) / mean;
  out.equilateral = out.edge_spread <= equilateral_tol;
  if (out.equilateral) {
    out.classes = DistanceVector({mean, out.table(1, 3), out.table(1, 4), out.table(2, 4),
                                  out.table(2, 5), out.table(3, 5)});
  }
  return out;
}

double cayley_menger(const std::array<double, 6>& d) {
  for (double v : d) {
    if (!(v > 0.0)) throw InvalidArgument("Cayley-Menger distances must be positive");
  }
  const double ij = d[0] * d[0], ik = d[1] * d[1], il = d[2] * d[2];
  const double jk = d[3] * d[3], jl = d[4] * d[4], kl = d[5] * d[5];
  Eigen::Matrix<double, 5, 5> m;
  m << 0, 1, 1, 1, 1,
       1, 0, ij, ik, il,
       1, ij, 0, jk, jl,
       1, ik, jk, 0, kl,
       1, il, jl, kl, 0;
  return m.partialPivLu().determinant();
}

double cayley_menger(const DistanceTable& t, int i, int j, int k, int l) {
  return cayley_menger({t(i, j), t(i, k), t(i, l), t(j, k), t(j, l), t(k, l)});
}

std::string to_string(Branch branch) { return branch == Branch::A ? "A" : "B"; }

Branch parse_branch(const std::string& text) {
  if (text == "A" || text == "a") return Branch::A;
  if (text == "B" || text == "b") return Branch::B;
  throw InvalidArgument("branch must be A or B, got '" + text + "'");
}

double symmetric_radicand(double y4) {
  // -16 y^4 + 56 y^2 + 15 written as a completed square in y^2.
  const double w = y4 * y4 - 1.75;
  return 64.0 - 16.0 * w * w;
}

SymmetricShape::SymmetricShape(double y4, Branch branch) : y4_(y4), branch_(branch) {
  if (!std::isfinite(y4) || y4 < 0.0 || y4 > kMaxY4) {
    throw OutOfDomain("y4 must lie in [0, sqrt(15)/2], got " + std::to_string(y4));
  }
}

PlanarConfiguration symmetric_coords(const SymmetricShape& shape) {
  const double y4 = shape.y4();
  const double s = std::sqrt(std::max(0.0, symmetric_radicand(y4)));
  const double sign = shape.branch() == Branch::A ? 1.0 : -1.0;
  const double u = y4 * y4;
  const double denom = 4.0 * (4.0 * u + 1.0);
  const double y3 = (8.0 * u * y4 + 2.0 * y4 + sign * s) / denom;
  const double x3 = (4.0 * u + 1.0 + sign * 2.0 * y4 * s) / denom;
  return PlanarConfiguration({Point{-0.5, 0.0}, Point{0.5, 0.0}, Point{x3, y3}, Point{0.0, y4},
                              Point{-x3, y3}});
}

std::string to_string(Closure closure) { return closure == Closure::Plus ? "plus" : "minus"; }

namespace {

struct ChainPoints {
  Point q1, q2, q3, q4;
};

ChainPoints place_chain(const ChainAngles& angles) {
  ChainPoints c;
  c.q1 = {-0.5, 0.0};
  c.q2 = {0.5, 0.0};
  const double phi = std::numbers::pi - angles.theta12;
  c.q3 = c.q2 + Point{std::cos(phi), std::sin(phi)};
  const double psi = phi + std::numbers::pi - angles.theta23;
  c.q4 = c.q3 + Point{std::cos(psi), std::sin(psi)};
  return c;
}

}  // namespace

bool closure_feasible(const ChainAngles& angles) {
  if (!std::isfinite(angles.theta12) || !std::isfinite(angles.theta23)) return false;
  const ChainPoints c = place_chain(angles);
  const double gap = norm(c.q1 - c.q4);
  return gap <= 2.0 && gap > 1e-12;
}

PlanarConfiguration cyclic_from_angles(const ChainAngles& angles) {
  if (!closure_feasible(angles)) {
    throw OutOfDomain("chain angles cannot be closed with two unit edges");
  }
  const ChainPoints c = place_chain(angles);
  const Point d = c.q1 - c.q4;
  const double gap = norm(d);
  const double h = std::sqrt(std::max(0.0, 1.0 - 0.25 * gap * gap));
  const Point right{d.y / gap, -d.x / gap};
  const Point mid = 0.5 * (c.q1 + c.q4);
  const double side = angles.closure == Closure::Plus ? h : -h;
  return PlanarConfiguration({c.q1, c.q2, c.q3, c.q4, mid + side * right});
}

double vertex_angle(const PlanarConfiguration& config, int v) {
  check_label(v);
  const Point here = config[v];
  const Point next = config[wrap_label(v + 1)] - here;
  const Point prev = config[wrap_label(v - 1)] - here;
  double t = std::atan2(prev.y, prev.x) - std::atan2(next.y, next.x);
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

double signed_area(const PlanarConfiguration& config) {
  double a = 0.0;
  for (int i = 1; i <= 5; ++i) a += cross(config[i], config[wrap_label(i + 1)]);
  return 0.5 * a;
}

bool is_convex_polygon(const PlanarConfiguration& config) {
  int positive = 0;
  int negative = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) {
        const double a = oriented_area(config, i, j, k);
        if (a > 0.0) ++positive;
        else if (a < 0.0) ++negative;
      }
  return positive == 10 || negative == 10;
}

int hull_vertex_count(const PlanarConfiguration& config) {
  const auto& p = config.points();
  return static_cast<int>(convex_hull({p.begin(), p.end()}).size());
}

std::optional<int> interior_point(const PlanarConfiguration& config) {
  std::optional<int> found;
  for (int k = 1; k <= 5; ++k) {
    std::vector<Point> others;
    for (int i = 1; i <= 5; ++i)
      if (i != k) others.push_back(config[i]);
    if (strictly_inside(convex_hull(others), config[k])) {
      if (found) return std::nullopt;
      found = k;
    }
  }
  return found;
}

PlanarConfiguration mirrored(const PlanarConfiguration& config) {
  std::array<Point, 5> p = config.points();
  for (auto& q : p) q.x = -q.x;
  return PlanarConfiguration(p);
}

PlanarConfiguration scaled(const PlanarConfiguration& config, double s) {
  std::array<Point, 5> p = config.points();
  for (auto& q : p) q = s * q;
  return PlanarConfiguration(p);
}

PlanarConfiguration relabeled(const PlanarConfiguration& config, int shift) {
  std::array<Point, 5> p{};
  for (int i = 1; i <= 5; ++i) p[wrap_label(i + shift) - 1] = config[i];
  return PlanarConfiguration(p);
}

PlanarConfiguration realize_distance_classes(const DistanceVector& classes, double tol) {
  const double e = classes.r12();
  const double c = 0.5 * e;
  double ysq = 0.0;
  const double scale_tol = tol * e * e;

  const Point q3 = axis_circle_intersection(c, classes.r13(), e, ysq);
  if (ysq < -scale_tol) throw OutOfDomain("r13 is not realizable with unit edges");

  const Point q4up = axis_circle_intersection(c, classes.r14(), classes.r24(), ysq);
  if (ysq < -scale_tol) throw OutOfDomain("r14, r24 are not realizable");
  const Point q4dn{q4up.x, -q4up.y};
  const Point q4 = std::abs(norm(q4up - q3) - e) <= std::abs(norm(q4dn - q3) - e) ? q4up : q4dn;

  const Point q5up = axis_circle_intersection(c, e, classes.r25(), ysq);
  if (ysq < -scale_tol) throw OutOfDomain("r25 is not realizable");
  const Point q5dn{q5up.x, -q5up.y};
  auto misfit = [&](Point q5) {
    return std::abs(norm(q5 - q3) - classes.r35()) + std::abs(norm(q5 - q4) - e);
  };
  const Point q5 = misfit(q5up) <= misfit(q5dn) ? q5up : q5dn;

  PlanarConfiguration config({Point{-c, 0.0}, Point{c, 0.0}, q3, q4, q5});
  const DistanceTable target = DistanceTable::from_classes(classes);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      if (std::abs(norm(config[i] - config[j]) - target(i, j)) > tol * e) {
        throw OutOfDomain("distance classes are not realizable in the plane");
      }
    }
  return config;
}

std::string SignType::name() const {
  switch (kind) {
    case Kind::A1: return "A1";
    case Kind::A2: return "A2";
    case Kind::A3: return "A3";
    case Kind::A4: return "A4";
    case Kind::A5: return "A5";
    case Kind::B1: return "B1";
    case Kind::B2: return "B2";
    case Kind::B3: return "B3";
    case Kind::B4: return "B4";
    case Kind::B5: return "B5";
    case Kind::Boundary: return "boundary(" + boundary + ")";
  }
  return "?";
}

SignType::Kind parse_sign_type(const std::string& name) {
  static const std::array<std::pair<const char*, SignType::Kind>, 10> table = {{
      {"A1", SignType::Kind::A1}, {"A2", SignType::Kind::A2}, {"A3", SignType::Kind::A3},
      {"A4", SignType::Kind::A4}, {"A5", SignType::Kind::A5}, {"B1", SignType::Kind::B1},
      {"B2", SignType::Kind::B2}, {"B3", SignType::Kind::B3}, {"B4", SignType::Kind::B4},
      {"B5", SignType::Kind::B5},
  }};
  for (const auto& [label, kind] : table)
    if (name == label) return kind;
  throw InvalidArgument("unknown sign type '" + name + "'");
}

namespace {

struct SignPattern {
  SignType::Kind kind;
  // Signs of D123, D134, D135, D345, r13-1, r14-1, r35-1; 0 = unconstrained.
  std::array<int, 7> signs;
};

// Branch A shares D123 > 0, D135 > 0, r13 > 1; branch B shares r35 < 1.
// A5 is the convex window past the house shape where r35 drops below 1.
constexpr std::array<SignPattern, 10> kPatterns = {{
    {SignType::Kind::A1, {+1, -1, +1, -1, +1, -1, -1}},
    {SignType::Kind::A2, {+1, -1, +1, -1, +1, -1, +1}},
    {SignType::Kind::A3, {+1, +1, +1, -1, +1, -1, +1}},
    {SignType::Kind::A4, {+1, +1, +1, +1, +1, +1, +1}},
    {SignType::Kind::A5, {+1, +1, +1, +1, +1, +1, -1}},
    {SignType::Kind::B1, {-1, +1, -1, +1, +1, -1, -1}},
    {SignType::Kind::B2, {-1, +1, +1, -1, -1, -1, -1}},
    {SignType::Kind::B3, {+1, -1, -1, -1, -1, +1, -1}},
    {SignType::Kind::B4, {+1, +1, -1, -1, -1, +1, -1}},
    {SignType::Kind::B5, {+1, +1, +1, +1, +1, +1, -1}},
}};

bool is_branch_a(SignType::Kind k) {
  return k == SignType::Kind::A1 || k == SignType::Kind::A2 || k == SignType::Kind::A3 ||
         k == SignType::Kind::A4 || k == SignType::Kind::A5;
}

}  // namespace

SignType classify_sign_type(const SymmetricShape& shape) {
  const PlanarConfiguration q = symmetric_coords(shape);

  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (norm(q[i] - q[j]) < kSignGuard) {
        return {SignType::Kind::Boundary,
                "collision(" + std::to_string(i) + "," + std::to_string(j) + ")"};
      }

  const std::array<double, 7> features = {
      oriented_area(q, 1, 2, 3),       oriented_area(q, 1, 3, 4),
      oriented_area(q, 1, 3, 5),       oriented_area(q, 3, 4, 5),
      norm(q[1] - q[3]) - 1.0,         norm(q[1] - q[4]) - 1.0,
      norm(q[3] - q[5]) - 1.0,
  };
  static constexpr std::array<const char*, 7> kNames = {"D123 = 0", "D134 = 0", "D135 = 0",
                                                        "D345 = 0", "r13 = 1",  "r14 = 1",
                                                        "r35 = 1"};
  std::string on;
  for (std::size_t f = 0; f < features.size(); ++f) {
    if (std::abs(features[f]) < kSignGuard) {
      if (!on.empty()) on += ", ";
      on += kNames[f];
    }
  }
  if (shape.y4() < kSignGuard) {
    if (!on.empty()) on += ", ";
    on += "D124 = 0";
  }
  if (!on.empty()) return {SignType::Kind::Boundary, on};

  const bool want_a = shape.branch() == Branch::A;
  for (const auto& pattern : kPatterns) {
    if (is_branch_a(pattern.kind) != want_a) continue;
    bool match = true;
    for (std::size_t f = 0; f < features.size() && match; ++f) {
      if (pattern.signs[f] != 0 && (features[f] > 0.0 ? 1 : -1) != pattern.signs[f]) {
        match = false;
      }
    }
    if (match) return {pattern.kind, {}};
  }
  return {SignType::Kind::Boundary, "unmatched sign pattern"};
}

}  // namespace eqcc
