#include "genlab/metrics.hpp"

#include <cmath>

#include "genlab/sequence.hpp"

namespace genlab {

double truncated_psum(const ComplexSeq& f, const ComplexSeq& g, double p, Index truncation) {
  KahanSum acc;
  for (Index n = 1; n <= truncation; ++n) {
    const double m = std::abs(f.at(n) - g.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
  }
  return acc.value();
}

Interval lp_distance(const ComplexSeq& f, const ComplexSeq& g, double p, Index truncation) {
  if (!(p > 0.0)) throw UsageError("lp_distance: p must be > 0");
  if (truncation < 1) throw UsageError("lp_distance: truncation must be >= 1");

  const double head = truncated_psum(f, g, p, truncation);

  const Complex one{1.0, 0.0};
  const Complex coeffs[2] = {one, -one};
  const ComplexSeq seqs[2] = {f, g};
  const ComplexSeq diff = linear_combine(coeffs, seqs);
  const SeqProfile profile = build_profile(diff);
  const auto tail = tail_psum_upper(diff, profile, p, truncation);

  Interval out;
  if (p >= 1.0) {
    out.lo = widen_down(std::pow(head, 1.0 / p));
    out.hi = tail ? widen_up(std::pow(head + *tail, 1.0 / p)) : kInf;
  } else {
    out.lo = widen_down(head);
    out.hi = tail ? widen_up(head + *tail) : kInf;
  }
  return out;
}

Interval frechet_distance(const ComplexSeq& f, const ComplexSeq& g, const SpaceSpec& spec,
                          int depth, Index truncation) {
  const auto* cap = std::get_if<CapAboveSpace>(&spec);
  if (!cap) throw UsageError("frechet_distance: space must be a cap-above spec");
  if (depth < 1) throw UsageError("frechet_distance: depth must be >= 1");

  const auto squash = [](double d) { return std::isfinite(d) ? d / (1.0 + d) : 1.0; };

  KahanSum lo_acc;
  KahanSum hi_acc;
  double weight = 1.0;
  for (int m = 1; m <= depth; ++m) {
    weight *= 0.5;
    const double pm = cap->exponent(m);
    if (!(pm > cap->a)) throw UsageError("frechet_distance: schedule must stay above a");
    const Interval dm = lp_distance(f, g, pm, truncation);
    lo_acc.add(weight * squash(dm.lo));
    hi_acc.add(weight * squash(dm.hi));
  }
  Interval out;
  out.lo = widen_down(lo_acc.value());
  out.hi = widen_up(hi_acc.value() + std::pow(0.5, depth));
  return out;
}

}  // namespace genlab
