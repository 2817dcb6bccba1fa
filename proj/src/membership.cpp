#include "genlab/membership.hpp"

#include <cmath>
#include <sstream>

#include "genlab/blocks.hpp"

namespace genlab {

namespace {

Undetermined undetermined_psum(const ComplexSeq& f, double p) {
  const Index t = default_truncation();
  KahanSum acc;
  for (Index n = 1; n <= t; ++n) {
    const double m = std::abs(f.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
  }
  return Undetermined{acc.value(), t};
}

Undetermined undetermined_sup(const ComplexSeq& f) {
  const Index t = default_truncation();
  double m = 0.0;
  for (Index n = 1; n <= t; ++n) m = std::max(m, std::abs(f.at(n)));
  return Undetermined{m, t};
}

Verdict membership_lp(const ComplexSeq& f, const SeqProfile& profile, double p) {
  if (const auto bound = full_psum_upper(f, profile, p)) {
    std::ostringstream note;
    note << "p-sum bounded by direct prefix evaluation plus integral tails "
            "sum_{k>K} k^(-s) <= K^(1-s)/(s-1) at s = gamma*p";
    return CertifiedIn{*bound, note.str()};
  }
  if (auto div = psum_divergence(profile, p)) return CertifiedOut{std::move(*div)};
  return undetermined_psum(f, p);
}

}  // namespace

Verdict membership(const ComplexSeq& f, const SpaceSpec& space) {
  const SeqProfile profile = build_profile(f);

  if (std::holds_alternative<LInfSpace>(space)) {
    if (const auto bound = sup_upper(f, profile)) {
      return CertifiedIn{*bound, "sup bounded by prefix maximum plus certificate sup bounds"};
    }
    return undetermined_sup(f);
  }

  if (std::holds_alternative<C0Space>(space)) {
    const auto bound = sup_upper(f, profile);
    if (certifies_vanishing(profile) && bound) {
      return CertifiedIn{*bound,
                         "finite prefix plus decaying power-law tails: values vanish at infinity"};
    }
    if (auto div = nonvanishing_divergence(profile)) return CertifiedOut{std::move(*div)};
    return undetermined_sup(f);
  }

  if (const auto* lp = std::get_if<LpSpace>(&space)) {
    return membership_lp(f, profile, lp->p);
  }

  const auto& cap = std::get<CapAboveSpace>(space);
  // In the intersection iff in lp(p_m) for every m.  Certified-in needs every
  // atom to satisfy gamma * p_m > 1 for all m, which for p_m -> a means
  // gamma * a >= 1 (and a > 0); finite-support-only profiles are always in.
  if (!profile.opaque) {
    const bool block_ok =
        !profile.block_part || profile.block_part->zero_state == BlockZeroState::kAllZero;
    bool atoms_ok = true;
    for (const PowerAtom& a : profile.atoms) {
      if (!(cap.a > 0.0) || a.gamma * cap.a < 1.0) atoms_ok = false;
    }
    if (block_ok && atoms_ok) {
      const double p1 = cap.exponent(1);
      if (const auto bound = full_psum_upper(f, profile, p1)) {
        std::ostringstream note;
        note << "gamma*a >= 1 for every power tail, so gamma*p_m > 1 for the whole schedule; "
                "bound reported at p_1 = "
             << p1;
        return CertifiedIn{*bound, note.str()};
      }
    }
    // Certified-out: find one schedule exponent whose p-sum diverges.
    constexpr int kScheduleSearchCap = 1 << 20;
    double gamma_min = kInf;
    for (const PowerAtom& a : profile.atoms) gamma_min = std::min(gamma_min, a.gamma);
    const bool constant_out =
        profile.block_part && profile.block_part->zero_state == BlockZeroState::kHasNonzero;
    if (constant_out || gamma_min < kInf) {
      int attempts = 0;
      for (int m = 1; m <= kScheduleSearchCap && attempts < 4; ++m) {
        const double pm = cap.exponent(m);
        if (!(pm > cap.a)) break;
        if (!constant_out && gamma_min * pm > 1.0) continue;
        ++attempts;
        if (auto div = psum_divergence(profile, pm)) {
          div->note += " (schedule exponent p_" + std::to_string(m) + " = " + std::to_string(pm) +
                       " of the cap-above metric)";
          return CertifiedOut{std::move(*div)};
        }
      }
    }
  }
  return undetermined_psum(f, cap.exponent(1));
}

EscapeRecord escape_index(const ComplexSeq& f, const ComplexSeq& g, std::uint64_t k, double M,
                          double p) {
  if (k == 0) throw UsageError("escape_index: k must be >= 1");
  if (!(p > 0.0)) throw UsageError("escape_index: p must be > 0");
  if (!(M > 0.0)) throw UsageError("escape_index: threshold must be > 0");

  const SeqProfile f_profile = build_profile(f);
  const auto f_bound = full_psum_upper(f, f_profile, p);
  if (!f_bound) {
    throw UndeterminedError("escape_index: f carries no certified p-sum bound");
  }
  const SeqProfile g_profile = build_profile(g);
  auto div = psum_divergence(g_profile, p);
  if (!div) {
    throw UndeterminedError("escape_index: g carries no divergence certificate at this exponent");
  }

  // Required mass R for the partial p-sums of g:
  //   p > 1:  (G_N^(1/p))/k - F^(1/p) > M^(1/p)   =>  G_N > (k (M^(1/p) + F^(1/p)))^p
  //   p <= 1:  G_N / k^p - F > M                  =>  G_N > k^p (M + F)
  const double kd = static_cast<double>(k);
  double required;
  std::ostringstream how;
  if (p > 1.0) {
    required = std::pow(kd * (std::pow(M, 1.0 / p) + std::pow(*f_bound, 1.0 / p)), p);
    how << "reverse triangle inequality: ||f + g/k||_p >= ||g||_p/k - ||f||_p";
  } else {
    required = std::pow(kd, p) * (M + *f_bound);
    how << "superadditivity |a+b|^p >= |b|^p - |a|^p for p <= 1";
  }
  required = widen_up(required);

  EscapeRecord rec;
  rec.point = div->escape(required);
  rec.threshold = M;
  rec.f_psum_bound = *f_bound;
  rec.required = required;
  how << "; divergent partial sums bounded below by "
      << (div->form == GrowthForm::kHarmonicLog ? "scale*(ln(K+1)-ln(skip+1))" : "scale*(K-skip)")
      << " with scale " << div->scale << ", skip " << div->skip << " on block " << div->block;
  rec.derivation = how.str();
  return rec;
}

}  // namespace genlab
