#include "eqcc/symmetric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>

#include <boost/math/tools/toms748_solve.hpp>

#include "eqcc/detail/symmetric_eval.hpp"
#include "eqcc/error.hpp"

namespace eqcc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_A(double A) {
  if (!std::isfinite(A) || A < 2.0) throw InvalidArgument("exponent A must be >= 2");
}

void check_y4(double y4) {
  if (!(y4 >= 0.0 && y4 <= kMaxY4)) {
    throw OutOfDomain("y4 outside [0, sqrt(15)/2]: " + std::to_string(y4));
  }
}

int strict_sign(const Interval& x) {
  if (x.positive()) return 1;
  if (x.negative()) return -1;
  return 0;
}

// The sign-list features of classify_sign_type, without the guard band.
std::array<double, 7> features(double y4, Branch branch) {
  const PlanarConfiguration q = symmetric_coords(SymmetricShape(y4, branch));
  return {oriented_area(q, 1, 2, 3), oriented_area(q, 1, 3, 4), oriented_area(q, 1, 3, 5),
          oriented_area(q, 3, 4, 5), norm(q[1] - q[3]) - 1.0,   norm(q[1] - q[4]) - 1.0,
          norm(q[3] - q[5]) - 1.0};
}

double min_separation(double y4, Branch branch) {
  const PlanarConfiguration q = symmetric_coords(SymmetricShape(y4, branch));
  double m = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) m = std::min(m, norm(q[i] - q[j]));
  return m;
}

std::vector<SignTypeWindow> compute_windows(Branch branch) {
  constexpr int kGrid = 20000;
  std::vector<double> cuts{0.0};
  auto sign_of = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };

  double prev_y = kMaxY4 / kGrid;
  auto prev = features(prev_y, branch);
  for (int k = 2; k < kGrid; ++k) {
    const double y = kMaxY4 * k / kGrid;
    const auto cur = features(y, branch);
    for (std::size_t f = 0; f < cur.size(); ++f) {
      if (sign_of(cur[f]) == sign_of(prev[f])) continue;
      auto g = [&](double t) { return features(t, branch)[f]; };
      double root = y;
      if (g(prev_y) == 0.0) {
        root = prev_y;
      } else if (g(y) != 0.0) {
        boost::uintmax_t iters = 200;
        const auto br = boost::math::tools::toms748_solve(
            g, prev_y, y, [](double a, double b) { return std::abs(b - a) <= 1e-16; }, iters);
        root = 0.5 * (br.first + br.second);
      }
      cuts.push_back(root);
      break;
    }
    prev = cur;
    prev_y = y;
  }
  cuts.push_back(kMaxY4);

  std::vector<SignTypeWindow> windows;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double lo = cuts[c];
    const double hi = cuts[c + 1];
    const SignType st = classify_sign_type(SymmetricShape(0.5 * (lo + hi), branch));
    if (st.is_boundary()) continue;
    if (!windows.empty() && windows.back().kind == st.kind) {
      windows.back().hi = hi;
      continue;
    }
    windows.push_back({st.kind, lo, hi, false, false});
  }
  for (auto& w : windows) {
    w.lo_collision = w.lo > 0.0 && min_separation(w.lo, branch) < 1e-6;
    w.hi_collision = w.hi < kMaxY4 && min_separation(w.hi, branch) < 1e-6;
  }
  return windows;
}

}  // namespace

double symmetric_F(double y4, double A, Branch branch) {
  check_A(A);
  check_y4(y4);
  return detail::symmetric_F(y4, A, branch);
}

std::pair<double, double> symmetric_F_dF(double y4, double A, Branch branch) {
  check_A(A);
  check_y4(y4);
  const Dual<double> f = detail::symmetric_F(Dual<double>::variable(y4), A, branch);
  return {f.v, f.d};
}

Interval symmetric_F_enclosure(double y4, const Interval& A, Branch branch) {
  check_y4(y4);
  return detail::symmetric_F(Interval(y4), A, branch);
}

Interval SignTypeWindow::open(double margin) const {
  const double a = (lo_collision || lo == 0.0) ? lo + margin : lo;
  const double b = (hi_collision || hi >= kMaxY4) ? hi - margin : hi;
  return {a, b};
}

const std::vector<SignTypeWindow>& sign_type_windows(Branch branch) {
  static std::once_flag once_a, once_b;
  static std::vector<SignTypeWindow> a, b;
  if (branch == Branch::A) {
    std::call_once(once_a, [] { a = compute_windows(Branch::A); });
    return a;
  }
  std::call_once(once_b, [] { b = compute_windows(Branch::B); });
  return b;
}

const SignTypeWindow& sign_type_window(SignType::Kind kind) {
  if (kind == SignType::Kind::Boundary) throw InvalidArgument("boundary has no window");
  const bool on_a = kind == SignType::Kind::A1 || kind == SignType::Kind::A2 ||
                    kind == SignType::Kind::A3 || kind == SignType::Kind::A4 ||
                    kind == SignType::Kind::A5;
  for (const auto& w : sign_type_windows(on_a ? Branch::A : Branch::B))
    if (w.kind == kind) return w;
  throw InvalidArgument("no window for sign type");
}

RootRecord describe_root(Branch branch, double A, const Interval& enclosure) {
  RootRecord rec;
  rec.y4 = enclosure;
  rec.branch = branch;
  rec.A = A;
  const SymmetricShape shape(enclosure.mid(), branch);
  rec.sign_type = classify_sign_type(shape);
  rec.F_lo = symmetric_F(enclosure.lo(), A, branch);
  rec.F_hi = symmetric_F(enclosure.hi(), A, branch);
  const MassKernel k = mass_kernel(mass_coefficient_matrix(shape, A));
  rec.rank_ratio = k.singular_values(2) / k.singular_values(0);
  rec.la_residual = kNaN;
  if (k.feasible && k.masses) {
    rec.masses = k.masses;
    rec.positive = k.positive;
    rec.la_residual = laura_andoyer(symmetric_coords(shape), *k.masses, A).max_abs();
  }
  return rec;
}

IsolationResult isolate_roots(Branch branch, double A, const Interval& window,
                              const IsolationOptions& opts) {
  check_A(A);
  if (window.lo() < 0.0 || window.hi() > kMaxY4) {
    throw OutOfDomain("window leaves the branch domain");
  }
  if (!(opts.tol > 0.0)) throw InvalidArgument("tolerance must be positive");

  const Interval Ai(A);
  IsolationResult out;
  std::vector<Interval> stack{window};
  std::size_t boxes = 0;

  while (!stack.empty()) {
    const Interval X = stack.back();
    stack.pop_back();
    if (++boxes > opts.max_boxes) {
      out.unresolved.push_back(X);
      continue;
    }

    bool split = true;
    try {
      const Interval Fx = detail::symmetric_F(X, Ai, branch);
      if (!Fx.contains_zero()) continue;
      const Dual<Interval> d = detail::symmetric_F(Dual<Interval>::variable(X), Ai, branch);
      if (!d.d.contains_zero()) {
        Interval flo = symmetric_F_enclosure(X.lo(), Ai, branch);
        Interval fhi = symmetric_F_enclosure(X.hi(), Ai, branch);
        const int slo = strict_sign(flo);
        const int shi = strict_sign(fhi);
        if (slo != 0 && shi != 0) {
          split = false;
          if (slo != shi) {
            double lo = X.lo(), hi = X.hi();
            while (hi - lo > opts.tol) {
              const double m = 0.5 * (lo + hi);
              if (m <= lo || m >= hi) break;
              const int sm = strict_sign(symmetric_F_enclosure(m, Ai, branch));
              if (sm == slo) lo = m;
              else if (sm == shi) hi = m;
              else break;
            }
            out.roots.push_back(describe_root(branch, A, Interval(lo, hi)));
          }
        }
      }
    } catch (const OutOfDomain&) {
    } catch (const EmptyInterval&) {
    }

    if (!split) continue;
    if (X.width() <= opts.min_width) {
      out.unresolved.push_back(X);
      continue;
    }
    const auto [left, right] = X.bisect();
    stack.push_back(right);
    stack.push_back(left);
  }

  // adjacent unresolved slivers read better merged
  std::vector<Interval> merged;
  for (const auto& u : out.unresolved) {
    if (!merged.empty() && merged.back().hi() >= u.lo()) {
      merged.back() = Interval::hull(merged.back(), u);
    } else {
      merged.push_back(u);
    }
  }
  out.unresolved = std::move(merged);
  return out;
}

MassPolynomial::MassPolynomial(std::vector<long long> coefficients, Provenance provenance,
                               std::string variable)
    : coefficients_(std::move(coefficients)),
      provenance_(provenance),
      variable_(std::move(variable)) {
  if (coefficients_.empty()) throw InvalidArgument("empty polynomial");
}

MassPolynomial MassPolynomial::vortex() {
  return MassPolynomial({64, -752, 2316, -109, -2830, 45, 1362, 215, -149, -17},
                        Provenance::A2vortex);
}

MassPolynomial MassPolynomial::a4_case() {
  return MassPolynomial({12288, -232064, 636883, 5616221, 2342977, -15626678, -6546497,
                         17143788, -1407668, -5326884, 456601, 2374416, -239673, -387130,
                         -33431, 25519, 957},
                        Provenance::A4case);
}

long double MassPolynomial::evaluate(long double x) const {
  long double v = 0.0L;
  for (long long c : coefficients_) v = v * x + static_cast<long double>(c);
  return v;
}

std::string to_string(MassPolynomial::Provenance p) {
  return p == MassPolynomial::Provenance::A2vortex ? "A2vortex" : "A4case";
}

double verify_mass_polynomial(const MassPolynomial& poly, double m4) {
  const long double x = std::abs(static_cast<long double>(m4));
  long double scale = 0.0L;
  for (long long c : poly.coefficients()) scale = scale * x + std::abs(static_cast<long double>(c));
  if (scale == 0.0L) return 0.0;
  return static_cast<double>(std::abs(poly.evaluate(m4)) / scale);
}

int a4_root_count(double A, double eps) {
  const SignTypeWindow& w = sign_type_window(SignType::Kind::A4);
  IsolationOptions opts;
  opts.tol = 1e-10;
  int count = 1;
  count += static_cast<int>(
      isolate_roots(Branch::A, A, Interval(w.lo, kPentagonY4 - eps), opts).roots.size());
  count += static_cast<int>(
      isolate_roots(Branch::A, A, Interval(kPentagonY4 + eps, w.hi), opts).roots.size());
  return count;
}

BifurcationResult bifurcation_scan(const Interval& A_range, double step, double tol) {
  check_A(A_range.lo());
  if (!(step > 0.0) || !(tol > 0.0)) throw InvalidArgument("step and tol must be positive");

  BifurcationResult res;
  const int n = static_cast<int>(std::ceil(A_range.width() / step - 1e-9));
  std::optional<std::pair<double, double>> bracket;
  for (int k = 0; k <= n; ++k) {
    const double a = std::min(A_range.lo() + k * step, A_range.hi());
    const int c = a4_root_count(a);
    res.scan.emplace_back(a, c);
    if (!bracket && res.scan.size() >= 2) {
      const auto& before = res.scan[res.scan.size() - 2];
      if (before.second == 1 && c >= 3) bracket = std::make_pair(before.first, a);
    }
  }
  if (!bracket) {
    throw NoBifurcationFound("A4 root count does not jump from 1 to 3 on " + to_string(A_range));
  }

  auto [lo, hi] = *bracket;
  res.count_below = 1;
  res.count_above = a4_root_count(hi);
  // bisect on the pentagon slope when it flips inside the bracket
  auto slope = [](double a) { return symmetric_F_dF(kPentagonY4, a, Branch::A).second; };
  const bool slope_flips = slope(lo) > 0.0 && slope(hi) < 0.0;
  while (hi - lo > tol) {
    const double m = 0.5 * (lo + hi);
    int c = slope_flips ? (slope(m) > 0.0 ? 1 : 3) : a4_root_count(m);
    if (c != 1 && c < 3) c = slope(m) > 0.0 ? 1 : 3;
    if (c == 1) lo = m;
    else hi = m;
  }
  res.A_c = Interval(lo, hi);
  const auto [f, df] = symmetric_F_dF(kPentagonY4, res.A_c.mid(), Branch::A);
  res.F_at = f;
  res.dF_at = df;
  return res;
}

std::vector<ExclusionCheck> exclude_sign_types(Branch branch, double A, std::size_t grid_points) {
  check_A(A);
  if (grid_points < 2) throw InvalidArgument("grid needs at least two points");
  using K = SignType::Kind;
  struct Claim {
    K kind;
    int row;
    int sign;
  };
  static const std::array<Claim, 7> kClaims = {{
      {K::A1, 0, -1}, {K::A3, 0, +1}, {K::A5, 0, -1}, {K::B1, 0, +1},
      {K::B3, 0, +1}, {K::B4, 1, +1}, {K::B5, 0, -1},
  }};

  std::vector<ExclusionCheck> out;
  for (const Claim& claim : kClaims) {
    const SignTypeWindow* w = nullptr;
    for (const auto& cand : sign_type_windows(branch))
      if (cand.kind == claim.kind) w = &cand;
    if (!w) continue;

    ExclusionCheck chk{claim.kind, claim.row == 0 ? "L13" : "L14", claim.sign, A, 0, {}};
    for (std::size_t k = 0; k < grid_points; ++k) {
      if ((k == 0 && w->lo_collision) || (k + 1 == grid_points && w->hi_collision)) continue;
      const double y = k + 1 == grid_points
                           ? w->hi
                           : w->lo + (w->hi - w->lo) * static_cast<double>(k) / (grid_points - 1);
      const MassMatrix M = mass_coefficient_matrix(SymmetricShape(y, branch), A);
      bool signed_entry = false;
      bool ok = true;
      for (int c = 0; c < 3; ++c) {
        const double v = M(claim.row, c);
        if (std::abs(v) <= kSignGuard) continue;
        signed_entry = true;
        if ((v > 0.0 ? 1 : -1) != claim.sign) ok = false;
      }
      ++chk.points;
      if (!ok || !signed_entry) chk.counterexamples.push_back(y);
    }
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace eqcc
