#ifndef GENLAB_METRICS_HPP_
#define GENLAB_METRICS_HPP_

#include "genlab/profile.hpp"
#include "genlab/spaces.hpp"

namespace genlab {

/// Enclosure of the lp distance between f and g.  For p >= 1 this is the
/// norm metric (sum |f-g|^p)^(1/p); for 0 < p < 1 it is the p-sum metric
/// sum |f-g|^p.  lo is the truncated value; hi adds the certified tail bound
/// derived from the certificates, or +inf when none exists.
Interval lp_distance(const ComplexSeq& f, const ComplexSeq& g, double p, Index truncation);

/// Enclosure of the Frechet-type metric of the cap-above space:
///   d(f, g) = sum_m 2^(-m) * d_{p_m}(f, g) / (1 + d_{p_m}(f, g)),
/// with the norm metric for p_m >= 1 and the p-sum metric for p_m < 1.
/// The m-series is evaluated to `depth` terms; the remainder (< 2^-depth)
/// is folded into hi.
Interval frechet_distance(const ComplexSeq& f, const ComplexSeq& g, const SpaceSpec& spec,
                          int depth, Index truncation);

/// Truncated p-sum sum_{n<=truncation} |f(n)-g(n)|^p (shared by tests).
double truncated_psum(const ComplexSeq& f, const ComplexSeq& g, double p, Index truncation);

}  // namespace genlab

#endif  // GENLAB_METRICS_HPP_
