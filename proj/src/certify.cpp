#include "eqcc/certify.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "eqcc/detail/symmetric_eval.hpp"
#include "eqcc/error.hpp"

namespace eqcc {

namespace {

void check_box(const Box& box) {
  if (box.y4.lo() < 0.0 || box.y4.hi() > kMaxY4) {
    throw OutOfDomain("y4 box leaves [0, sqrt(15)/2]");
  }
  if (!(box.A.lo() >= 2.0) || !std::isfinite(box.A.hi())) {
    throw InvalidArgument("A box must lie in [2, inf)");
  }
}

int strict_sign(const Interval& x) {
  if (x.positive()) return 1;
  if (x.negative()) return -1;
  return 0;
}

struct Exploration {
  std::vector<Leaf> leaves;
  std::size_t boxes = 0;
  int max_depth = 0;
  bool limit_hit = false;
};

using D1 = Dual<Interval>;
using D2 = Dual<D1>;

struct Judgement {
  LeafVerdict verdict = LeafVerdict::Undecided;
  bool split_y4 = true;
};

// Natural enclosures of F and dF/dy4 tightened by mean-value forms about the
// box centre; second derivatives come from nested duals.
struct Tight {
  FEnclosure f;
  Interval F_A;
};

Tight tight_enclosure(const Box& box, Branch branch) {
  const D1 nat = detail::symmetric_F(D1::variable(box.y4), box.A, branch);
  Tight t{{nat.v, nat.d}, Interval::entire()};

  const double cy = box.y4.mid();
  const double ca = box.A.mid();
  const D1 c = detail::symmetric_F(D1::variable(Interval(cy)), Interval(ca), branch);
  const Interval dy = box.y4 - cy;
  const Interval da = box.A - ca;

  // (y4, A) mixed: v.v = F, v.d = F_y, d.v = F_A, d.d = F_yA
  const D2 mixed = detail::symmetric_F(D2(D1::variable(box.y4), D1(0.0)),
                                       D2(D1(box.A), D1(1.0)), branch);
  // y4 twice: d.d = F_yy
  const D2 twice = detail::symmetric_F(D2(D1::variable(box.y4), D1(1.0, 0.0)), box.A, branch);

  t.F_A = mixed.d.v;
  const Interval F_mv = c.v + nat.d * dy + mixed.d.v * da;
  const Interval dF_mv = c.d + twice.d.d * dy + mixed.d.d * da;
  t.f.F = intersect(t.f.F, F_mv);
  t.f.dF = intersect(t.f.dF, dF_mv);
  return t;
}

Judgement judge(const Box& box, Branch branch, double ny, double na) {
  Judgement j;
  j.split_y4 = box.A.is_thin() || (!box.y4.is_thin() && ny >= na);
  try {
    const Interval F = detail::symmetric_F(box.y4, box.A, branch);
    if (!F.contains_zero()) {
      j.verdict = LeafVerdict::FNonzero;
      return j;
    }
    const Tight t = tight_enclosure(box, branch);
    if (!t.f.F.contains_zero()) j.verdict = LeafVerdict::FNonzero;
    else if (t.f.dF.positive()) j.verdict = LeafVerdict::DerivativePositive;
    else if (t.f.dF.negative()) j.verdict = LeafVerdict::DerivativeNegative;

    // split where F varies most: |dF/dy4|·width(y4) against |dF/dA|·width(A)
    if (!box.A.is_thin() && !box.y4.is_thin()) {
      const double gy = t.f.dF.mag() * box.y4.width();
      const double ga = t.F_A.mag() * box.A.width();
      if (std::isfinite(gy) && std::isfinite(ga) && (gy > 0.0 || ga > 0.0)) j.split_y4 = gy >= ga;
    }
  } catch (const OutOfDomain&) {
    // a distance enclosure reached zero; only y4 refinement helps
    j.split_y4 = !box.y4.is_thin();
  } catch (const EmptyInterval&) {
    j.split_y4 = !box.y4.is_thin();
  }
  return j;
}

// Depth-first bisection, left halves first; deterministic.
// With `wanted` set, derivative leaves of the other sign keep splitting.
Exploration explore(const Box& region, Branch branch, const CertifyOptions& opts,
                    std::optional<LeafVerdict> wanted = std::nullopt) {
  Exploration ex;
  const double wy = region.y4.width();
  const double wa = region.A.width();
  std::vector<std::pair<Box, int>> stack{{region, 0}};
  while (!stack.empty()) {
    auto [box, depth] = stack.back();
    stack.pop_back();
    ex.max_depth = std::max(ex.max_depth, depth);
    if (++ex.boxes > opts.max_boxes) {
      ex.limit_hit = true;
      ex.leaves.push_back({box, LeafVerdict::Undecided, depth});
      continue;
    }
    const double ny = wy > 0.0 ? box.y4.width() / wy : 0.0;
    const double na = wa > 0.0 ? box.A.width() / wa : 0.0;
    const Judgement jd = judge(box, branch, ny, na);
    const LeafVerdict v = jd.verdict;
    const bool settled = v == LeafVerdict::FNonzero ||
                         (v != LeafVerdict::Undecided && (!wanted || v == *wanted));
    if (settled || depth >= opts.max_depth) {
      ex.leaves.push_back({box, v, depth});
      continue;
    }
    Box left = box, right = box;
    if (jd.split_y4) {
      std::tie(left.y4, right.y4) = box.y4.bisect();
    } else {
      std::tie(left.A, right.A) = box.A.bisect();
    }
    stack.push_back({right, depth + 1});
    stack.push_back({left, depth + 1});
  }
  std::stable_sort(ex.leaves.begin(), ex.leaves.end(), [](const Leaf& a, const Leaf& b) {
    if (a.box.y4.lo() != b.box.y4.lo()) return a.box.y4.lo() < b.box.y4.lo();
    return a.box.A.lo() < b.box.A.lo();
  });
  return ex;
}

}  // namespace

FEnclosure eval_F_interval(const Box& box, Branch branch) {
  check_box(box);
  return tight_enclosure(box, branch).f;
}

std::string to_string(LeafVerdict v) {
  switch (v) {
    case LeafVerdict::FNonzero: return "F!=0";
    case LeafVerdict::DerivativePositive: return "dF>0";
    case LeafVerdict::DerivativeNegative: return "dF<0";
    case LeafVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Certified: return "certified";
    case CertificateStatus::Undecided: return "undecided";
    case CertificateStatus::PreconditionFailed: return "precondition-failed";
  }
  return "undecided";
}

std::vector<Box> NoCommonZeroCertificate::undecided() const {
  std::vector<Box> out;
  for (const auto& l : leaves)
    if (l.verdict == LeafVerdict::Undecided) out.push_back(l.box);
  return out;
}

NoCommonZeroCertificate certify_no_common_zero(const Box& region, Branch branch,
                                               const CertifyOptions& opts) {
  check_box(region);
  NoCommonZeroCertificate cert;
  cert.branch = branch;
  cert.region = region;
  Exploration ex = explore(region, branch, opts);
  cert.leaves = std::move(ex.leaves);
  cert.boxes_processed = ex.boxes;
  cert.max_depth_reached = ex.max_depth;
  cert.box_limit_hit = ex.limit_hit;
  cert.certified = std::none_of(cert.leaves.begin(), cert.leaves.end(),
                                [](const Leaf& l) { return l.verdict == LeafVerdict::Undecided; });
  return cert;
}

UniqueRootCertificate certify_unique_root(const Interval& window, const Interval& A,
                                          Branch branch, const CertifyOptions& opts) {
  check_box({window, A});
  UniqueRootCertificate cert;
  cert.branch = branch;
  cert.window = window;
  cert.A = A;

  // endpoint signs, splitting A until every piece is strict
  std::optional<std::pair<int, int>> pattern;
  std::vector<std::pair<Interval, int>> pieces{{A, 0}};
  while (!pieces.empty()) {
    auto [a, depth] = pieces.back();
    pieces.pop_back();
    Interval flo, fhi;
    try {
      flo = detail::symmetric_F(Interval(window.lo()), a, branch);
      fhi = detail::symmetric_F(Interval(window.hi()), a, branch);
    } catch (const std::domain_error& e) {
      cert.status = CertificateStatus::Undecided;
      cert.message = std::string("endpoint evaluation failed: ") + e.what();
      return cert;
    }
    const int slo = strict_sign(flo), shi = strict_sign(fhi);
    if (slo == 0 || shi == 0) {
      if (depth >= 30) {
        cert.status = CertificateStatus::Undecided;
        cert.message = "endpoint sign not strict for A in " + to_string(a);
        return cert;
      }
      const auto [l, r] = a.bisect();
      pieces.push_back({r, depth + 1});
      pieces.push_back({l, depth + 1});
      continue;
    }
    cert.endpoints.push_back({a, flo, fhi});
    if (slo == shi) {
      cert.status = CertificateStatus::PreconditionFailed;
      cert.message = "F has the same sign at both window ends for A in " + to_string(a);
      return cert;
    }
    if (pattern && *pattern != std::make_pair(slo, shi)) {
      cert.status = CertificateStatus::Undecided;
      cert.message = "endpoint sign pattern changes with A";
      return cert;
    }
    pattern = std::make_pair(slo, shi);
  }
  cert.derivative_sign = pattern->second;

  const LeafVerdict wanted = cert.derivative_sign > 0 ? LeafVerdict::DerivativePositive
                                                      : LeafVerdict::DerivativeNegative;
  Exploration ex = explore({window, A}, branch, opts, wanted);
  cert.leaves = std::move(ex.leaves);
  cert.boxes_processed = ex.boxes;
  std::size_t bad = 0;
  for (const auto& l : cert.leaves)
    if (l.verdict != LeafVerdict::FNonzero && l.verdict != wanted) ++bad;
  if (bad == 0) {
    cert.status = CertificateStatus::Certified;
  } else {
    cert.status = CertificateStatus::Undecided;
    cert.message = std::to_string(bad) + " boxes where F may vanish without the expected derivative sign";
  }
  return cert;
}

}  // namespace eqcc
