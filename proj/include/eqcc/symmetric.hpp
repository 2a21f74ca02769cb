#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcc/equations.hpp"
#include "eqcc/geometry.hpp"
#include "eqcc/interval.hpp"

namespace eqcc {

// The 2x2 minor F(y4, A) of the symmetric mass-coefficient matrix.
// Throws OutOfDomain outside [0, sqrt(15)/2].
double symmetric_F(double y4, double A, Branch branch);
// (F, dF/dy4) by forward-mode differentiation.
std::pair<double, double> symmetric_F_dF(double y4, double A, Branch branch);

// Thin-interval evaluation at a point y4 (y4 is rounded to the nearest
// double; the enclosure accounts for all arithmetic after that).
Interval symmetric_F_enclosure(double y4, const Interval& A, Branch branch);

struct SignTypeWindow {
  SignType::Kind kind;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_collision = false;  // two bodies coincide at the endpoint
  bool hi_collision = false;

  // Endpoints pulled inward by `margin` where the endpoint is a collision or
  // the degenerate y4 = 0.
  Interval open(double margin) const;
};

// Maximal y4 windows on which the sign type is constant, with endpoints
// solved to ~1e-15. Computed once per branch and cached.
const std::vector<SignTypeWindow>& sign_type_windows(Branch branch);
const SignTypeWindow& sign_type_window(SignType::Kind kind);

struct RootRecord {
  Interval y4;
  Branch branch = Branch::A;
  SignType sign_type;
  double A = 2.0;
  std::optional<MassVector> masses;  // from the symmetric kernel, m1 = m2 = 1
  bool positive = false;
  double rank_ratio = 0.0;  // sigma_min / sigma_max of the mass matrix
  double la_residual = 0.0;  // max |L_ij| at the recovered masses (nan if none)
  double F_lo = 0.0, F_hi = 0.0;  // F at the enclosure ends (opposite signs)
};

struct IsolationOptions {
  double tol = 1e-12;
  double min_width = 1e-14;
  std::size_t max_boxes = 200000;
};

struct IsolationResult {
  std::vector<RootRecord> roots;
  std::vector<Interval> unresolved;
};

// Interval branch and bound over the window; a root is reported only when
// the derivative enclosure excludes zero and F has opposite strict signs at
// the enclosure ends.
IsolationResult isolate_roots(Branch branch, double A, const Interval& window,
                              const IsolationOptions& opts = {});

// Fills masses, sign type and residuals for an enclosure.
RootRecord describe_root(Branch branch, double A, const Interval& enclosure);

class MassPolynomial {
 public:
  enum class Provenance { A2vortex, A4case };

  MassPolynomial(std::vector<long long> coefficients, Provenance provenance,
                 std::string variable = "m4");

  static MassPolynomial vortex();  // degree 9, A = 2
  static MassPolynomial a4_case();  // degree 16, A = 4

  // Highest degree first.
  const std::vector<long long>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Provenance provenance() const { return provenance_; }
  const std::string& variable() const { return variable_; }
  long double evaluate(long double x) const;

 private:
  std::vector<long long> coefficients_;
  Provenance provenance_;
  std::string variable_;
};

std::string to_string(MassPolynomial::Provenance p);

// |p(m4)| / sum_i |c_i| |m4|^i
double verify_mass_polynomial(const MassPolynomial& poly, double m4);

struct BifurcationResult {
  Interval A_c;
  int count_below = 0;
  int count_above = 0;
  double F_at = 0.0;   // F at the pentagon for mid(A_c)
  double dF_at = 0.0;  // dF/dy4 there
  std::vector<std::pair<double, int>> scan;  // (A, A4 root count)
};

// Number of A4-window roots, counting the regular pentagon once and looking
// for others outside an eps-neighbourhood of it.
int a4_root_count(double A, double eps = 1e-8);

// Throws NoBifurcationFound when the count never jumps from 1 to 3.
BifurcationResult bifurcation_scan(const Interval& A_range, double step, double tol = 1e-6);

struct ExclusionCheck {
  SignType::Kind kind;
  std::string equation;  // "L13" or "L14", rows of the mass matrix
  int sign = 0;          // claimed sign of every mass coefficient
  double A = 2.0;
  std::size_t points = 0;
  std::vector<double> counterexamples;  // y4 values
  bool holds() const { return counterexamples.empty() && points > 0; }
};

// Dense-grid check of the sign-type exclusions on one branch.
std::vector<ExclusionCheck> exclude_sign_types(Branch branch, double A,
                                               std::size_t grid_points = 10000);

}  // namespace eqcc
