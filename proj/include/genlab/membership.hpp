#ifndef GENLAB_MEMBERSHIP_HPP_
#define GENLAB_MEMBERSHIP_HPP_

#include <string>

#include "genlab/profile.hpp"
#include "genlab/spaces.hpp"

namespace genlab {

/// Certified membership of a sequence in a chain space.
///
/// The verdict semantics by space:
///  - lp(p):    CertifiedIn carries an upper bound for the p-sum
///              sum |f(n)|^p; CertifiedOut carries a divergence certificate
///              for the p-sum.
///  - cap(a):   CertifiedIn means "in lp(p_m) for every m" (bound reported
///              at p_1); CertifiedOut names one failing exponent p_m.
///  - c0:       CertifiedIn carries a sup bound and certified decay;
///              CertifiedOut carries a non-vanishing certificate.
///  - linf:     CertifiedIn carries a sup bound.
/// Opaque certificates yield Undetermined with the partial sum at the
/// default truncation.
Verdict membership(const ComplexSeq& f, const SpaceSpec& space);

/// Certified escape index for the perturbation f + g/k: an index N such
/// that sum_{n<=N} |f(n) + g(n)/k|^p > M is proven.  Uses the reverse
/// triangle inequality for p > 1 and p-th power superadditivity for
/// 0 < p <= 1; the divergent part is lower-bounded analytically, so N is
/// certified without enumeration (and may be far too large to enumerate).
struct EscapeRecord {
  EscapePoint point;
  double threshold = 0.0;
  double f_psum_bound = 0.0;  // certified upper bound used for f
  double required = 0.0;      // lower-bound mass demanded of g's partial sums
  std::string derivation;
};

/// Throws UndeterminedError when f lacks a summability bound or g lacks a
/// divergence certificate at exponent p.
EscapeRecord escape_index(const ComplexSeq& f, const ComplexSeq& g, std::uint64_t k, double M,
                          double p);

}  // namespace genlab

#endif  // GENLAB_MEMBERSHIP_HPP_
