#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace eqcc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

// Five labeled bodies. Labels are 1-based everywhere in the public API.
class PlanarConfiguration {
 public:
  PlanarConfiguration() = default;
  explicit PlanarConfiguration(const std::array<Point, 5>& points) : points_(points) {}

  // Similarity transform (orientation preserving) placing q1 = (-1/2, 0) and
  // q2 = (1/2, 0). Throws CollisionError when q1 == q2.
  static PlanarConfiguration normalized(const std::array<Point, 5>& points);

  const Point& operator[](int label) const;
  const std::array<Point, 5>& points() const { return points_; }

  // True when q1, q2 sit at the normalized positions within tol.
  bool is_normalized(double tol = 1e-12) const;

 private:
  std::array<Point, 5> points_{};
};

// Δ_{i,j,k} = (q_i - q_j) ∧ (q_i - q_k). Throws InvalidArgument on repeated
// or out-of-range labels.
double oriented_area(const PlanarConfiguration& config, int i, int j, int k);

// The six distance classes of an equilateral cyclic pentagon, in the order
// (r12, r13, r14, r24, r25, r35). Edge r12 stands for all five cycle edges.
enum class DistanceClass : int { R12 = 0, R13, R14, R24, R25, R35 };

inline constexpr std::array<const char*, 6> kDistanceClassNames = {"r12", "r13", "r14",
                                                                   "r24", "r25", "r35"};

// Class index of the pair (i, j) under the equilateral identification.
DistanceClass distance_class(int i, int j);

class DistanceVector {
 public:
  // Throws InvalidArgument unless every entry is strictly positive.
  explicit DistanceVector(const std::array<double, 6>& values);

  double operator[](DistanceClass c) const { return values_[static_cast<int>(c)]; }
  double r12() const { return values_[0]; }
  double r13() const { return values_[1]; }
  double r14() const { return values_[2]; }
  double r24() const { return values_[3]; }
  double r25() const { return values_[4]; }
  double r35() const { return values_[5]; }
  const std::array<double, 6>& values() const { return values_; }

 private:
  std::array<double, 6> values_;
};

// Symmetric 5x5 table of r_{i,j}; zero diagonal.
class DistanceTable {
 public:
  DistanceTable() = default;
  double operator()(int i, int j) const;
  void set(int i, int j, double value);
  double min_offdiagonal() const;
  double max_offdiagonal() const;

  // Expand equilateral classes into all ten pairs.
  static DistanceTable from_classes(const DistanceVector& classes);

 private:
  std::array<std::array<double, 5>, 5> d_{};
};

struct MutualDistances {
  DistanceTable table;
  bool equilateral = false;           // five cycle edges agree within tolerance
  double edge_spread = 0.0;           // (max edge - min edge) / mean edge
  std::optional<DistanceVector> classes;  // set when equilateral
};

// Throws CollisionError when two points coincide (relative to the largest
// distance).
MutualDistances mutual_distances(const PlanarConfiguration& config,
                                 double equilateral_tol = 1e-9);

// Determinant of the bordered 5x5 Cayley-Menger matrix for four points with
// pairwise distances ordered (r_ij, r_ik, r_il, r_jk, r_jl, r_kl).
double cayley_menger(const std::array<double, 6>& d);
double cayley_menger(const DistanceTable& table, int i, int j, int k, int l);

enum class Branch { A, B };

std::string to_string(Branch branch);
Branch parse_branch(const std::string& text);

// sqrt(15)/2, the positive root of -16 y^4 + 56 y^2 + 15.
inline const double kMaxY4 = std::sqrt(15.0) / 2.0;

// Notable parameter values along the symmetric family.
inline const double kSquareY4 = (2.0 - std::sqrt(3.0)) / 2.0;
inline const double kCollinearY4 = std::sqrt(5.0 - 2.0 * std::sqrt(5.0)) / 2.0;
inline const double kPentagonY4 = 0.5 * std::sqrt(5.0 + 2.0 * std::sqrt(5.0));
inline const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;
inline const double kHouseY4 = 1.0 + std::sqrt(3.0) / 2.0;

double symmetric_radicand(double y4);

class SymmetricShape {
 public:
  // Throws OutOfDomain when y4 < 0 or the radicand is negative.
  SymmetricShape(double y4, Branch branch);

  double y4() const { return y4_; }
  Branch branch() const { return branch_; }

 private:
  double y4_;
  Branch branch_;
};

// q3 = (x3, y3), q4 = (0, y4), q5 = (-x3, y3) with the matched-sign closed
// forms; q1, q2 normalized.
PlanarConfiguration symmetric_coords(const SymmetricShape& shape);

enum class Closure { Plus, Minus };

std::string to_string(Closure closure);

// theta12 is the angle at vertex 2 and theta23 the angle at vertex 3, both
// measured counterclockwise from the edge to the next vertex to the edge to
// the previous vertex. A convex counterclockwise pentagon has interior angles
// here. Plus puts q5 to the right of the directed chord q4 -> q1.
struct ChainAngles {
  double theta12 = 0.0;
  double theta23 = 0.0;
  Closure closure = Closure::Plus;
};

bool closure_feasible(const ChainAngles& angles);

// Throws OutOfDomain when |q4 - q1| > 2 or q4 == q1.
PlanarConfiguration cyclic_from_angles(const ChainAngles& angles);

// Angle at vertex v of the cycle 1-2-3-4-5, in [0, 2pi), with the same
// convention as ChainAngles.
double vertex_angle(const PlanarConfiguration& config, int v);

// Shoelace area of the cycle 1-2-3-4-5 (positive when counterclockwise).
double signed_area(const PlanarConfiguration& config);

// All ten triangles Δ_{i,j,k} (i<j<k) share one strict sign.
bool is_convex_polygon(const PlanarConfiguration& config);

// Number of points that are vertices of the convex hull.
int hull_vertex_count(const PlanarConfiguration& config);

// The single label strictly inside the hull of the other four, if any.
std::optional<int> interior_point(const PlanarConfiguration& config);

PlanarConfiguration mirrored(const PlanarConfiguration& config);
PlanarConfiguration scaled(const PlanarConfiguration& config, double s);

// C5 relabeling: body with old label i gets label i + shift (mod 5).
PlanarConfiguration relabeled(const PlanarConfiguration& config, int shift);

// Rebuilds coordinates from the six distance classes (q3 above the axis).
// Throws OutOfDomain when the classes are not realizable in the plane.
PlanarConfiguration realize_distance_classes(const DistanceVector& classes, double tol = 1e-9);

struct SignType {
  enum class Kind { A1, A2, A3, A4, A5, B1, B2, B3, B4, B5, Boundary };

  Kind kind = Kind::Boundary;
  std::string boundary;  // names the vanishing condition(s) for Boundary

  bool is_boundary() const { return kind == Kind::Boundary; }
  std::string name() const;

  friend bool operator==(const SignType& a, const SignType& b) {
    return a.kind == b.kind && a.boundary == b.boundary;
  }
};

SignType::Kind parse_sign_type(const std::string& name);

// Guard band for sign decisions on unit-scale quantities.
inline constexpr double kSignGuard = 1e-10;

// Matches the symmetric shape against the A1..A5 / B1..B5 sign lists, or
// names the boundary it sits on (r35 = 1, D134 = 0, D345 = 0, collisions).
SignType classify_sign_type(const SymmetricShape& shape);

}  // namespace eqcc
