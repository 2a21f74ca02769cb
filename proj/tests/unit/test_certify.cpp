#include <doctest.h>

#include "eqcc/certify.hpp"
#include "eqcc/error.hpp"
#include "eqcc/symmetric.hpp"

using namespace eqcc;

namespace {

// dense float re-check of a certified box family
int violations(const std::vector<Leaf>& leaves, Branch b) {
  int bad = 0;
  for (const auto& l : leaves) {
    if (l.verdict == LeafVerdict::Undecided) continue;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 2; ++j) {
        const double y = l.box.y4.lo() + l.box.y4.width() * i / 4.0;
        const double a = l.box.A.lo() + l.box.A.width() * j / 2.0;
        const auto [F, dF] = symmetric_F_dF(y, a, b);
        if (l.verdict == LeafVerdict::FNonzero && F == 0.0) ++bad;
        if (l.verdict == LeafVerdict::DerivativePositive && dF < 0.0) ++bad;
        if (l.verdict == LeafVerdict::DerivativeNegative && dF > 0.0) ++bad;
      }
  }
  return bad;
}

}  // namespace

TEST_CASE("interval F enclosures") {
  const auto sq = eval_F_interval({Interval(kSquareY4), Interval(3.0)}, Branch::A);
  CHECK(sq.F.positive());
  const auto col = eval_F_interval({Interval(kCollinearY4), Interval(3.0)}, Branch::A);
  CHECK(col.F.negative());
  const auto pent = eval_F_interval({Interval(kPentagonY4 - 1e-6, kPentagonY4 + 1e-6), Interval(3.0)},
                                    Branch::A);
  CHECK(pent.F.contains_zero());

  // enclosure contains sampled point values
  const Box box{Interval(0.6, 0.7), Interval(2.2, 2.6)};
  const auto e = eval_F_interval(box, Branch::A);
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double y = 0.6 + 0.01 * i, a = 2.2 + 0.04 * j;
      const auto [F, dF] = symmetric_F_dF(y, a, Branch::A);
      CHECK(e.F.contains(F));
      CHECK(e.dF.contains(dF));
    }

  CHECK_THROWS_AS(eval_F_interval({Interval(1.0, 2.0), Interval(3.0)}, Branch::A), OutOfDomain);
  CHECK_THROWS_AS(eval_F_interval({Interval(0.5), Interval(1.5, 3.0)}, Branch::A), InvalidArgument);
}

TEST_CASE("unique root in the A2 window") {
  const Interval w = sign_type_window(SignType::Kind::A2).open(1e-12);
  const auto at2 = certify_unique_root(w, Interval(2.0), Branch::A);
  CHECK(at2.certified());
  const auto cert = certify_unique_root(w, Interval(2.0, 3.0), Branch::A);
  CHECK(cert.certified());
  CHECK(cert.derivative_sign == -1);
  CHECK(violations(cert.leaves, Branch::A) == 0);
  // leaves sorted by box coordinates
  for (std::size_t i = 1; i < cert.leaves.size(); ++i)
    CHECK(cert.leaves[i - 1].box.y4.lo() <= cert.leaves[i].box.y4.lo());
}

TEST_CASE("window without a sign change") {
  const auto cert = certify_unique_root(Interval(0.2, 0.3), Interval(2.0, 3.0), Branch::A);
  CHECK(cert.status == CertificateStatus::PreconditionFailed);
}

TEST_CASE("no common zero in the A4 window up to A = 3") {
  CertifyOptions opts;
  const Interval w = sign_type_window(SignType::Kind::A4).open(1e-12);
  const auto left = certify_no_common_zero({w, Interval(2.0, 2.2)}, Branch::A, opts);
  CHECK(left.certified);
  CHECK(violations(left.leaves, Branch::A) == 0);
}

TEST_CASE("depth cap gives undecided, never a false certificate") {
  CertifyOptions opts;
  opts.max_depth = 4;
  const Interval w = sign_type_window(SignType::Kind::A4).open(1e-9);
  const auto cert = certify_no_common_zero({w, Interval(3.0, 3.3)}, Branch::A, opts);
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.undecided().empty());
}
