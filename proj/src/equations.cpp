#include "eqcc/equations.hpp"

#include <cmath>
#include <numbers>
#include <regex>

#include <Eigen/SVD>

#include "eqcc/detail/symmetric_eval.hpp"
#include "eqcc/error.hpp"

namespace eqcc {

namespace {

int lab(int x) { return ((x - 1) % 5 + 5) % 5 + 1; }

void check_exponent(double A) {
  if (!std::isfinite(A) || A < 2.0) {
    throw InvalidArgument("exponent A must be a finite real >= 2");
  }
}

std::string pair_label(char prefix, int i, int j) {
  return std::string(1, prefix) + std::to_string(i) + std::to_string(j);
}

bool is_two_mass_pair(int i, int j) { return lab(i + 2) == j || lab(j + 2) == i; }

// r^{-A} table with collisions rejected.
std::array<std::array<double, 5>, 5> inverse_powers(const DistanceTable& d, double A) {
  std::array<std::array<double, 5>, 5> R{};
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const double r = d(i, j);
      if (!(r > 0.0)) throw CollisionError("zero mutual distance r" + std::to_string(i) + std::to_string(j));
      R[i - 1][j - 1] = std::pow(r, -A);
    }
  return R;
}

double a_ijk(const DistanceTable& d, int i, int j, int k) {
  const double rjk = j == k ? 0.0 : d(j, k);
  return rjk * rjk - d(i, k) * d(i, k) - d(i, j) * d(i, j);
}

// f_{i,j} split as a - λ̃ b.
std::pair<double, double> f_parts(const DistanceTable& d,
                                  const std::array<std::array<double, 5>, 5>& R,
                                  const MassVector& m, int i, int j) {
  double a = 0.0, b = 0.0;
  for (int k = 1; k <= 5; ++k) {
    if (k == i) continue;
    const double w = m(k) * a_ijk(d, i, j, k);
    a += w * R[i - 1][k - 1];
    b += w;
  }
  return {a, b};
}

}  // namespace

Exponent::Exponent(double A) : value_(A) {
  check_exponent(A);
  if (std::trunc(A) == A && A < 1e9) rational_ = Rational(static_cast<long long>(A));
}

Exponent::Exponent(Rational A) : value_(boost::rational_cast<double>(A)), rational_(A) {
  if (A < Rational(2)) throw InvalidArgument("exponent A must be >= 2");
}

Exponent Exponent::parse(const std::string& text) {
  static const std::regex frac(R"(^\s*(\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex dec(R"(^\s*(\d+)(?:\.(\d{0,12}))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    const long long q = std::stoll(m[2]);
    if (q == 0) throw InvalidArgument("exponent denominator is zero");
    return Exponent(Rational(std::stoll(m[1]), q));
  }
  if (std::regex_match(text, m, dec)) {
    long long num = std::stoll(m[1]);
    long long den = 1;
    for (char c : m[2].str()) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    return Exponent(Rational(num, den));
  }
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(text, &used);
    if (used != text.size()) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse exponent '" + text + "'");
  }
  return Exponent(v);
}

std::string Exponent::to_string() const {
  if (rational_) {
    if (rational_->denominator() == 1) return std::to_string(rational_->numerator());
    return std::to_string(rational_->numerator()) + "/" + std::to_string(rational_->denominator());
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

double MassVector::operator()(int label) const {
  if (label < 1 || label > 5) throw InvalidArgument("mass label out of range");
  return m_[label - 1];
}

bool MassVector::positive() const {
  for (double v : m_)
    if (!(v > 0.0)) return false;
  return true;
}

double MassVector::total() const {
  double s = 0.0;
  for (double v : m_) s += v;
  return s;
}

double ResidualReport::value(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return e.value;
  throw InvalidArgument("no residual labelled " + label);
}

double ResidualReport::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, std::abs(e.value));
  return m;
}

std::array<double, 5> laura_andoyer_coefficients(const PlanarConfiguration& config, double A,
                                                 int i, int j) {
  check_exponent(A);
  if (i == j) throw InvalidArgument("L_{i,j} needs distinct labels");
  std::array<double, 5> c{};
  for (int k = 1; k <= 5; ++k) {
    if (k == i || k == j) continue;
    const double rik = norm(config[i] - config[k]);
    const double rjk = norm(config[j] - config[k]);
    if (!(rik > 0.0) || !(rjk > 0.0)) throw CollisionError("coincident bodies in L_{i,j}");
    c[k - 1] = (std::pow(rik, -A) - std::pow(rjk, -A)) * oriented_area(config, i, j, k);
  }
  return c;
}

ResidualReport laura_andoyer(const PlanarConfiguration& config, const MassVector& masses,
                             double A) {
  check_exponent(A);
  const MutualDistances md = mutual_distances(config);
  ResidualReport rep;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const auto c = laura_andoyer_coefficients(config, A, i, j);
      double v = 0.0;
      for (int k = 1; k <= 5; ++k) v += masses(k) * c[k - 1];
      std::string group;
      if (md.equilateral) group = is_two_mass_pair(i, j) ? "two-mass" : "three-mass";
      rep.entries.push_back({pair_label('L', i, j), v, group});
    }
  return rep;
}

double least_squares_lambda(const DistanceTable& distances, const MassVector& masses, double A) {
  check_exponent(A);
  const auto R = inverse_powers(distances, A);
  double ab = 0.0, bb = 0.0;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const auto [a, b] = f_parts(distances, R, masses, i, j);
      ab += a * b;
      bb += b * b;
    }
  if (bb == 0.0) throw InvalidArgument("f residuals do not depend on lambda");
  return ab / bb;
}

ResidualReport albouy_chenciner_f(const DistanceTable& distances, const MassVector& masses,
                                  double A, const EquationContext& ctx) {
  check_exponent(A);
  const auto R = inverse_powers(distances, A);
  ResidualReport rep;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const auto [a, b] = f_parts(distances, R, masses, i, j);
      rep.entries.push_back({pair_label('f', i, j), a - ctx.lambda_tilde * b, {}});
    }
  return rep;
}

ResidualReport albouy_chenciner_g(const DistanceTable& distances, const MassVector& masses,
                                  double A, const EquationContext& ctx) {
  check_exponent(A);
  const auto R = inverse_powers(distances, A);
  ResidualReport rep;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      double g = 0.0;
      for (int k = 1; k <= 5; ++k) {
        double term = 0.0;
        if (k != i) term += (R[i - 1][k - 1] - ctx.lambda_tilde) * a_ijk(distances, i, j, k);
        if (k != j) term += (R[j - 1][k - 1] - ctx.lambda_tilde) * a_ijk(distances, j, i, k);
        g += masses(k) * term;
      }
      rep.entries.push_back({pair_label('g', i, j), g, {}});
    }
  return rep;
}

MassMatrix mass_coefficient_matrix(const SymmetricShape& shape, double A) {
  check_exponent(A);
  const auto t = detail::symmetric_terms(shape.y4(), A, shape.branch());
  if (!(t.r35 > 0.0) || !std::isfinite(t.R35)) throw OutOfDomain("q3 and q5 coincide");
  MassMatrix M;
  M << 0.0, (1 - t.R35) * t.d135, (t.R14 - 1) * t.d134,
       (1 - t.R14) * t.d124, (t.R13 - 1) * t.d134, 0.0,
       (1 - t.R13) * t.d123, (t.R13 - t.R35) * t.d135, (t.R14 - 1) * t.d145,
       (t.R13 - t.R14) * t.d134 + (1 - t.R14) * t.d145, (t.R35 - 1) * t.d345, 0.0;
  return M;
}

MassMatrix reduced_mass_coefficient_matrix(const SymmetricShape& shape, double A) {
  check_exponent(A);
  const auto t = detail::symmetric_terms(shape.y4(), A, shape.branch());
  if (t.d134 == 0.0) throw OutOfDomain("row reduction needs D134 != 0");
  MassMatrix M = mass_coefficient_matrix(shape, A);
  M(2, 1) = ((t.R13 - t.R35) - (1 - t.R35) * t.d145 / t.d134) * t.d135;
  M(2, 2) = 0.0;
  return M;
}

MassKernel mass_kernel(const MassMatrix& matrix, double rel_threshold) {
  MassKernel out;
  Eigen::JacobiSVD<MassMatrix> svd(matrix, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double smax = out.singular_values(0);
  out.rank = 0;
  for (int k = 0; k < 3; ++k)
    if (out.singular_values(k) > rel_threshold * smax) ++out.rank;
  if (out.rank > 2) return out;
  Eigen::Vector3d v = svd.matrixV().col(2);
  if (std::abs(v(0)) <= 1e-12 * v.norm()) return out;
  v /= v(0);
  out.feasible = true;
  out.masses = MassVector::symmetric(v(0), v(1), v(2));
  out.positive = out.masses->positive();
  return out;
}

La2Result la2_feasible(const PlanarConfiguration& config, double A) {
  check_exponent(A);
  const MutualDistances md = mutual_distances(config);
  if (!md.equilateral) throw NotEquilateral("configuration is not equilateral cyclic");
  const double edge = md.classes->r12();
  // coefficients scale like edge^(2-A)
  const double zero_tol = 1e-12 * std::pow(edge, 2.0 - A);

  La2Result res;
  res.feasible = true;
  for (int n = 0; n < 5; ++n) {
    La2Certificate& c = res.equations[n];
    c.i = n + 1;
    c.j = lab(n + 3);
    c.k1 = lab(n + 4);
    c.k2 = lab(n + 5);
    const auto coeff = laura_andoyer_coefficients(config, A, c.i, c.j);
    c.c1 = coeff[c.k1 - 1];
    c.c2 = coeff[c.k2 - 1];
    const bool z1 = std::abs(c.c1) <= zero_tol;
    const bool z2 = std::abs(c.c2) <= zero_tol;
    c.pass = (z1 && z2) || (!z1 && !z2 && (c.c1 > 0.0) != (c.c2 > 0.0));
    res.feasible = res.feasible && c.pass;
  }
  return res;
}

std::string to_string(Region region) {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::None: return "none";
  }
  return "none";
}

RegionResult region_classify(const PlanarConfiguration& input, double A) {
  RegionResult out;
  const MutualDistances md = mutual_distances(input);
  out.la2 = la2_feasible(input, A).feasible;
  out.convex = is_convex_polygon(input);
  out.interior = interior_point(input);

  const double e = md.classes->r12();
  bool all_longer = true, all_shorter = true;
  for (int c = 1; c < 6; ++c) {
    const double d = md.classes->values()[c];
    all_longer = all_longer && d > e;
    all_shorter = all_shorter && d < e;
  }

  if (out.interior) {
    // Conditions are stated for interior point 5 on a clockwise cycle.
    const PlanarConfiguration q = signed_area(input) > 0.0 ? mirrored(input) : input;
    const int s = *out.interior - 5;
    const double t1 = vertex_angle(q, lab(2 + s));
    const double t2 = vertex_angle(q, lab(3 + s));
    const double cap = 5.0 * std::numbers::pi / 3.0;
    out.region3_conditions = std::array<bool, 5>{
        t1 + t2 <= 3.0 * std::numbers::pi,
        t1 <= cap,
        t2 <= cap,
        oriented_area(q, lab(1 + s), lab(3 + s), lab(5 + s)) >= 0.0,
        oriented_area(q, lab(2 + s), lab(4 + s), lab(5 + s)) >= 0.0,
    };
  }

  if (!out.la2) return out;
  if (all_longer) {
    out.region = Region::I;
  } else if (all_shorter) {
    out.region = Region::II;
  } else if (out.region3_conditions) {
    bool all = true;
    for (bool b : *out.region3_conditions) all = all && b;
    if (all) out.region = Region::III;
  }
  return out;
}

RegionResult region_classify(const ChainAngles& angles, double A) {
  return region_classify(cyclic_from_angles(angles), A);
}

}  // namespace eqcc
