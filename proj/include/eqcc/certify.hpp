#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqcc/geometry.hpp"
#include "eqcc/interval.hpp"

namespace eqcc {

struct Box {
  Interval y4;
  Interval A;
};

struct FEnclosure {
  Interval F;
  Interval dF;  // dF/dy4
};

// Encloses F and dF/dy4 over the box. OutOfDomain when y4 leaves
// [0, sqrt(15)/2] or a distance enclosure reaches zero; InvalidArgument when
// A dips below 2.
FEnclosure eval_F_interval(const Box& box, Branch branch);

struct CertifyOptions {
  int max_depth = 60;
  std::size_t max_boxes = 2000000;
};

enum class LeafVerdict { FNonzero, DerivativePositive, DerivativeNegative, Undecided };

std::string to_string(LeafVerdict v);

struct Leaf {
  Box box;
  LeafVerdict verdict = LeafVerdict::Undecided;
  int depth = 0;
};

struct NoCommonZeroCertificate {
  Branch branch = Branch::A;
  Box region;
  bool certified = false;
  std::vector<Leaf> leaves;  // sorted by (y4.lo, A.lo)
  std::size_t boxes_processed = 0;
  int max_depth_reached = 0;
  bool box_limit_hit = false;

  std::vector<Box> undecided() const;
};

NoCommonZeroCertificate certify_no_common_zero(const Box& region, Branch branch,
                                               const CertifyOptions& opts = {});

enum class CertificateStatus { Certified, Undecided, PreconditionFailed };

std::string to_string(CertificateStatus s);

struct EndpointCheck {
  Interval A;
  Interval F_lo;  // F at window.lo over A
  Interval F_hi;
};

struct UniqueRootCertificate {
  CertificateStatus status = CertificateStatus::Undecided;
  Branch branch = Branch::A;
  Interval window;
  Interval A;
  std::vector<EndpointCheck> endpoints;
  int derivative_sign = 0;
  std::vector<Leaf> leaves;
  std::size_t boxes_processed = 0;
  std::string message;

  bool certified() const { return status == CertificateStatus::Certified; }
};

// Exactly one root of F(., a) in the window for every a in A: strict
// opposite endpoint signs plus one derivative sign wherever F may vanish.
UniqueRootCertificate certify_unique_root(const Interval& window, const Interval& A,
                                          Branch branch, const CertifyOptions& opts = {});

}  // namespace eqcc
