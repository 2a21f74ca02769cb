#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "eqcc/geometry.hpp"

namespace eqcc {

// Potential exponent A >= 2, optionally carrying an exact rational p/q.
class Exponent {
 public:
  using Rational = boost::rational<long long>;

  explicit Exponent(double A);
  explicit Exponent(Rational A);

  // Accepts "3", "5/2", "2.5". Decimal input is kept exact when it has a short
  // terminating expansion.
  static Exponent parse(const std::string& text);

  double value() const { return value_; }
  const std::optional<Rational>& rational() const { return rational_; }
  std::string to_string() const;

 private:
  double value_;
  std::optional<Rational> rational_;
};

class MassVector {
 public:
  MassVector() = default;
  explicit MassVector(const std::array<double, 5>& m) : m_(m) {}
  static MassVector equal() { return MassVector({1, 1, 1, 1, 1}); }
  // (m1, m1, m3, m4, m3) from the symmetric kernel (m1, m3, m4).
  static MassVector symmetric(double m1, double m3, double m4) {
    return MassVector({m1, m1, m3, m4, m3});
  }

  double operator()(int label) const;
  const std::array<double, 5>& values() const { return m_; }
  bool positive() const;
  double total() const;

 private:
  std::array<double, 5> m_{1, 1, 1, 1, 1};
};

struct EquationContext {
  double lambda_tilde = 1.0;
};

struct Residual {
  std::string label;  // "L12", "f21", "g35", ...
  double value = 0.0;
  std::string group;  // "two-mass" / "three-mass" for equilateral L reports
};

struct ResidualReport {
  std::vector<Residual> entries;

  double value(const std::string& label) const;  // throws InvalidArgument if absent
  double max_abs() const;
  std::size_t size() const { return entries.size(); }
};

// Coefficient of m_k in L_{i,j} = sum_k m_k (R_ik - R_jk) Δ_{i,j,k}; zero at k = i, j.
std::array<double, 5> laura_andoyer_coefficients(const PlanarConfiguration& config, double A,
                                                 int i, int j);

// The ten L_{i,j}, i < j. Equilateral inputs get two-mass/three-mass groups.
ResidualReport laura_andoyer(const PlanarConfiguration& config, const MassVector& masses,
                             double A);

// λ̃ minimizing the sum of squared f_{i,j} (f is affine in λ̃).
double least_squares_lambda(const DistanceTable& distances, const MassVector& masses, double A);

// The twenty f_{i,j}, i != j.
ResidualReport albouy_chenciner_f(const DistanceTable& distances, const MassVector& masses,
                                  double A, const EquationContext& ctx = {});

// The ten g_{i,j}, i < j, evaluated from the symmetric sum directly.
ResidualReport albouy_chenciner_g(const DistanceTable& distances, const MassVector& masses,
                                  double A, const EquationContext& ctx = {});

using MassMatrix = Eigen::Matrix<double, 4, 3>;

// Rows L13, L14, L15, L34; columns m1, m3, m4 (m2 = m1, m5 = m3).
MassMatrix mass_coefficient_matrix(const SymmetricShape& shape, double A);
// Same with the third row reduced against the second so its m4 entry is zero.
MassMatrix reduced_mass_coefficient_matrix(const SymmetricShape& shape, double A);

struct MassKernel {
  bool feasible = false;  // numerical rank <= 2 and the kernel has m1 != 0
  int rank = 3;
  Eigen::Vector3d singular_values = Eigen::Vector3d::Zero();
  std::optional<MassVector> masses;  // scaled so m1 = 1
  bool positive = false;
};

inline constexpr double kRankThreshold = 1e-9;

MassKernel mass_kernel(const MassMatrix& matrix, double rel_threshold = kRankThreshold);

struct La2Certificate {
  int i = 0, j = 0;  // the equation L_{i,j}, j = i + 2 (mod 5)
  int k1 = 0, k2 = 0;  // the two masses present
  double c1 = 0.0, c2 = 0.0;
  bool pass = false;
};

struct La2Result {
  bool feasible = false;
  std::array<La2Certificate, 5> equations;
};

// Throws NotEquilateral unless the five cycle edges agree to 1e-9.
La2Result la2_feasible(const PlanarConfiguration& config, double A);

enum class Region { I, II, III, None };

std::string to_string(Region region);

struct RegionResult {
  Region region = Region::None;
  bool la2 = false;
  bool convex = false;
  std::optional<int> interior;  // hull-interior label for concave shapes
  // theta sum, theta bounds, the two Δ conditions; set for concave shapes
  std::optional<std::array<bool, 5>> region3_conditions;
};

// Throws OutOfDomain when the closure is infeasible, CollisionError on
// coincident bodies.
RegionResult region_classify(const ChainAngles& angles, double A);
RegionResult region_classify(const PlanarConfiguration& config, double A);

}  // namespace eqcc
