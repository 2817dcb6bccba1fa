#include "genlab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "genlab/blocks.hpp"

namespace genlab {

namespace {

constexpr Index kEvalCap = 10'000'000;  // refuse to enumerate prefixes beyond this

struct Builder {
  Index finite_prefix = 0;
  std::vector<PowerAtom> atoms;
  std::vector<std::pair<Complex, BlockConstantCert>> block_parts;
  bool opaque = false;

  void walk(const TailCertificate& cert, Complex coeff) {
    if (coeff == Complex{0.0, 0.0}) return;
    const auto& st = cert.storage();
    if (const auto* fs = std::get_if<FiniteSupportCert>(&st)) {
      finite_prefix = std::max(finite_prefix, fs->n_max);
    } else if (const auto* pl = std::get_if<PowerLawCert>(&st)) {
      atoms.push_back({pl->block, pl->gamma, coeff});
    } else if (const auto* bc = std::get_if<BlockConstantCert>(&st)) {
      block_parts.emplace_back(coeff, *bc);
    } else if (const auto* lc = std::get_if<std::shared_ptr<LinearCombinationCert>>(&st)) {
      for (const auto& [a, sub] : (*lc)->terms) walk(sub, coeff * a);
    } else {
      opaque = true;
    }
  }
};

void merge_atoms(std::vector<PowerAtom>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const PowerAtom& x, const PowerAtom& y) {
    return std::tie(x.block, x.gamma) < std::tie(y.block, y.gamma);
  });
  std::vector<PowerAtom> merged;
  for (const PowerAtom& a : atoms) {
    if (!merged.empty() && merged.back().block == a.block && merged.back().gamma == a.gamma) {
      merged.back().coeff += a.coeff;
    } else {
      merged.push_back(a);
    }
  }
  std::erase_if(merged, [](const PowerAtom& a) { return a.coeff == Complex{0.0, 0.0}; });
  atoms = std::move(merged);
}

MergedBlockPart merge_block_parts(std::vector<std::pair<Complex, BlockConstantCert>> parts) {
  MergedBlockPart out;
  double sup = 0.0;
  for (const auto& [c, cert] : parts) sup += std::abs(c) * cert.sup_abs;
  out.sup_abs = widen_up(sup);

  auto shared = std::make_shared<std::vector<std::pair<Complex, BlockConstantCert>>>(std::move(parts));
  out.value = [shared](BlockId m) {
    Complex acc{0.0, 0.0};
    for (const auto& [c, cert] : *shared) acc += c * cert.constants(m);
    return acc;
  };

  // Structural zero analysis first, probing only as a fallback.
  bool all_declared_zero = true;
  int nonzero_parts = 0;
  BlockId candidate = 0;
  for (const auto& [c, cert] : *shared) {
    if (cert.first_nonzero.has_value()) {
      all_declared_zero = false;
      ++nonzero_parts;
      candidate = *cert.first_nonzero;
    }
  }
  if (all_declared_zero) {
    out.zero_state = BlockZeroState::kAllZero;
    return out;
  }
  if (nonzero_parts == 1) {
    const Complex v = out.value(candidate);
    if (v != Complex{0.0, 0.0}) {
      out.zero_state = BlockZeroState::kHasNonzero;
      out.nonzero_block = candidate;
      out.nonzero_value = v;
      return out;
    }
  }
  for (BlockId m = 1; m <= kBlockProbeLimit; ++m) {
    const Complex v = out.value(m);
    if (v != Complex{0.0, 0.0}) {
      out.zero_state = BlockZeroState::kHasNonzero;
      out.nonzero_block = m;
      out.nonzero_value = v;
      return out;
    }
  }
  out.zero_state = BlockZeroState::kUnknown;
  return out;
}

}  // namespace

std::vector<PowerAtom> SeqProfile::atoms_on(BlockId j) const {
  std::vector<PowerAtom> out;
  for (const PowerAtom& a : atoms) {
    if (a.block == j) out.push_back(a);
  }
  return out;
}

Complex SeqProfile::block_value(BlockId j) const {
  if (!block_part) return {0.0, 0.0};
  return block_part->value(j);
}

SeqProfile build_profile(const TailCertificate& cert) {
  Builder b;
  b.walk(cert, Complex{1.0, 0.0});
  SeqProfile p;
  p.opaque = b.opaque;
  if (b.opaque) return p;
  p.finite_prefix = b.finite_prefix;
  merge_atoms(b.atoms);
  p.atoms = std::move(b.atoms);
  if (!b.block_parts.empty()) p.block_part = merge_block_parts(std::move(b.block_parts));
  return p;
}

double zeta_tail_upper(double s, std::uint64_t k0) {
  if (!(s > 1.0)) return kInf;
  double bound;
  if (k0 == 0) {
    bound = 1.0 + 1.0 / (s - 1.0);
  } else {
    bound = std::pow(static_cast<double>(k0), 1.0 - s) / (s - 1.0);
  }
  return widen_up(bound);
}

double harmonic_tail_lower(std::uint64_t k0, double log_k_plus_1) {
  return log_k_plus_1 - std::log(static_cast<double>(k0) + 1.0);
}

namespace {

std::optional<double> prefix_psum(const ComplexSeq& seq, Index from, Index to, double p) {
  if (to <= from) return 0.0;
  if (to - from > kEvalCap) return std::nullopt;
  KahanSum acc;
  for (Index n = from + 1; n <= to; ++n) {
    const double m = std::abs(seq.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
  }
  return acc.value();
}

}  // namespace

std::optional<double> tail_psum_upper(const ComplexSeq& seq, const SeqProfile& profile, double p,
                                      Index from) {
  if (!(p > 0.0)) throw UsageError("tail_psum_upper: p must be > 0");
  if (profile.opaque) return std::nullopt;
  if (profile.block_part && profile.block_part->zero_state != BlockZeroState::kAllZero) {
    return std::nullopt;  // a surviving constant forces divergence; Unknown cannot be bounded
  }
  const Index t0 = std::max(from, profile.finite_prefix);
  const auto prefix = prefix_psum(seq, from, t0, p);
  if (!prefix) return std::nullopt;

  double atom_total = 0.0;
  if (p <= 1.0) {
    KahanSum acc;
    for (const PowerAtom& a : profile.atoms) {
      const double s = a.gamma * p;
      if (!(s > 1.0)) return std::nullopt;
      const std::uint64_t k0 = IndexFamily::positions_at_or_below(a.block, t0);
      acc.add(std::pow(std::abs(a.coeff), p) * zeta_tail_upper(s, k0));
    }
    atom_total = acc.value();
  } else {
    KahanSum norms;
    for (const PowerAtom& a : profile.atoms) {
      const double s = a.gamma * p;
      if (!(s > 1.0)) return std::nullopt;
      const std::uint64_t k0 = IndexFamily::positions_at_or_below(a.block, t0);
      norms.add(std::abs(a.coeff) * std::pow(zeta_tail_upper(s, k0), 1.0 / p));
    }
    atom_total = std::pow(norms.value(), p);
  }
  return widen_up(*prefix + atom_total);
}

std::optional<double> full_psum_upper(const ComplexSeq& seq, const SeqProfile& profile, double p) {
  return tail_psum_upper(seq, profile, p, 0);
}

std::optional<double> sup_upper(const ComplexSeq& seq, const SeqProfile& profile) {
  if (profile.opaque) return std::nullopt;
  if (profile.finite_prefix > kEvalCap) return std::nullopt;
  double m = 0.0;
  for (Index n = 1; n <= profile.finite_prefix; ++n) m = std::max(m, std::abs(seq.at(n)));
  double analytic = 0.0;
  for (const PowerAtom& a : profile.atoms) analytic += std::abs(a.coeff);
  if (profile.block_part) analytic += profile.block_part->sup_abs;
  return widen_up(std::max(m, analytic));
}

namespace {

// Dominance threshold: smallest K such that competitors decayed below half of
// the leading contribution, or nullopt when no such K is derivable.
std::optional<std::uint64_t> dominance_position(double lead_abs, double competitor_sum,
                                                double decay_exponent) {
  if (competitor_sum <= 0.0) return 1;
  if (!(decay_exponent > 0.0)) return std::nullopt;
  const double k_star = std::pow(2.0 * competitor_sum / lead_abs, 1.0 / decay_exponent);
  if (!std::isfinite(k_star) || k_star > 4.6e18) return std::nullopt;
  return static_cast<std::uint64_t>(std::ceil(std::max(1.0, k_star)));
}

}  // namespace

std::optional<PartialSumDivergence> psum_divergence(const SeqProfile& profile, double p) {
  if (!(p > 0.0)) throw UsageError("psum_divergence: p must be > 0");
  if (profile.opaque) return std::nullopt;

  // Route 1: a surviving block constant gives linear growth of the p-sum.
  if (profile.block_part && profile.block_part->zero_state == BlockZeroState::kHasNonzero) {
    const BlockId j = profile.block_part->nonzero_block;
    const double v = std::abs(profile.block_part->nonzero_value);
    double competitor = 0.0;
    double min_gamma = kInf;
    for (const PowerAtom& a : profile.atoms) {
      if (a.block == j || a.block == 0) {
        competitor += std::abs(a.coeff);
        min_gamma = std::min(min_gamma, a.gamma);
      }
    }
    const auto k_star = dominance_position(v, competitor, min_gamma);
    if (k_star) {
      PartialSumDivergence d;
      d.exponent = p;
      d.block = j;
      d.form = GrowthForm::kLinear;
      d.scale = std::pow(competitor > 0.0 ? v / 2.0 : v, p);
      d.skip = std::max<std::uint64_t>(*k_star - 1,
                                       IndexFamily::positions_at_or_below(j, profile.finite_prefix));
      d.note = "constant " + std::to_string(v) + " on block " + std::to_string(j) +
               ": p-sum grows linearly in the position count";
      return d;
    }
  }

  // Route 2: a power atom with gamma * p <= 1 dominates its block.
  for (const PowerAtom& lead : profile.atoms) {
    if (lead.gamma * p > 1.0) continue;
    const double lead_abs = std::abs(lead.coeff);

    if (lead.block != 0) {
      if (profile.block_value(lead.block) != Complex{0.0, 0.0}) continue;
      double competitor = 0.0;
      double delta = kInf;
      bool blocked = false;
      for (const PowerAtom& a : profile.atoms) {
        if (&a == &lead) continue;
        if (a.block != lead.block && a.block != 0) continue;
        if (!(a.gamma > lead.gamma)) {
          blocked = true;  // a slower or equal-decay rival on the same indices
          break;
        }
        competitor += std::abs(a.coeff);
        delta = std::min(delta, a.gamma - lead.gamma);
      }
      if (blocked) continue;
      const auto k_star = dominance_position(lead_abs, competitor, delta);
      if (!k_star) continue;
      PartialSumDivergence d;
      d.exponent = p;
      d.block = lead.block;
      d.form = GrowthForm::kHarmonicLog;
      d.scale = std::pow(competitor > 0.0 ? lead_abs / 2.0 : lead_abs, p);
      d.skip = std::max<std::uint64_t>(*k_star - 1, IndexFamily::positions_at_or_below(
                                                        lead.block, profile.finite_prefix));
      d.note = "power law k^(-" + std::to_string(lead.gamma) + ") on block " +
               std::to_string(lead.block) + " with gamma*p <= 1";
      return d;
    }

    // Full-run atom.  With no other atoms anywhere the run itself is clean;
    // otherwise restrict to a fresh block that no block atom touches.
    if (profile.atoms.size() == 1 &&
        (!profile.block_part || profile.block_part->zero_state == BlockZeroState::kAllZero)) {
      PartialSumDivergence d;
      d.exponent = p;
      d.block = 0;
      d.form = GrowthForm::kHarmonicLog;
      d.scale = std::pow(lead_abs, p);
      d.skip = profile.finite_prefix;
      d.note = "power law n^(-" + std::to_string(lead.gamma) + ") with gamma*p <= 1";
      return d;
    }
    BlockId fresh = 1;
    for (const PowerAtom& a : profile.atoms) fresh = std::max(fresh, a.block + 1);
    if (fresh > 48) continue;
    if (profile.block_value(fresh) != Complex{0.0, 0.0}) continue;
    double competitor = 0.0;
    double delta = kInf;
    bool blocked = false;
    for (const PowerAtom& a : profile.atoms) {
      if (&a == &lead) continue;
      if (a.block != 0) continue;  // block atoms never meet the fresh block
      if (!(a.gamma > lead.gamma)) {
        blocked = true;
        break;
      }
      competitor += std::abs(a.coeff);
      delta = std::min(delta, a.gamma - lead.gamma);
    }
    if (blocked) continue;
    // On block `fresh`, index n at position k satisfies k <= n <= 2^fresh * k,
    // so the lead term is at least lead_abs * 2^(-fresh*gamma) * k^(-gamma).
    const double block_factor = std::pow(2.0, -static_cast<double>(fresh) * lead.gamma);
    const auto k_star = dominance_position(lead_abs * block_factor, competitor, delta);
    if (!k_star) continue;
    PartialSumDivergence d;
    d.exponent = p;
    d.block = fresh;
    d.form = GrowthForm::kHarmonicLog;
    d.scale = std::pow((competitor > 0.0 ? lead_abs / 2.0 : lead_abs) * block_factor, p);
    d.skip = std::max<std::uint64_t>(*k_star - 1,
                                     IndexFamily::positions_at_or_below(fresh, profile.finite_prefix));
    d.note = "full-run power law restricted to block " + std::to_string(fresh);
    return d;
  }
  return std::nullopt;
}

std::optional<NonVanishingDivergence> nonvanishing_divergence(const SeqProfile& profile) {
  if (profile.opaque) return std::nullopt;
  if (!profile.block_part || profile.block_part->zero_state != BlockZeroState::kHasNonzero) {
    return std::nullopt;
  }
  const BlockId j = profile.block_part->nonzero_block;
  const double v = std::abs(profile.block_part->nonzero_value);
  double competitor = 0.0;
  double min_gamma = kInf;
  for (const PowerAtom& a : profile.atoms) {
    if (a.block == j || a.block == 0) {
      competitor += std::abs(a.coeff);
      min_gamma = std::min(min_gamma, a.gamma);
    }
  }
  const auto k_star = dominance_position(v, competitor, min_gamma);
  if (!k_star) return std::nullopt;
  NonVanishingDivergence d;
  d.block = j;
  d.floor_abs = competitor > 0.0 ? v / 2.0 : v;
  d.skip = std::max<std::uint64_t>(*k_star - 1,
                                   IndexFamily::positions_at_or_below(j, profile.finite_prefix));
  d.note = "block " + std::to_string(j) + " holds constant of modulus " + std::to_string(v);
  return d;
}

bool certifies_vanishing(const SeqProfile& profile) {
  if (profile.opaque) return false;
  if (profile.block_part && profile.block_part->zero_state != BlockZeroState::kAllZero) return false;
  return true;  // finite prefixes and power atoms always vanish at infinity
}

double PartialSumDivergence::lower_bound(std::uint64_t k) const {
  if (k <= skip) return 0.0;
  if (form == GrowthForm::kLinear) return scale * static_cast<double>(k - skip);
  return scale * harmonic_tail_lower(skip, std::log(static_cast<double>(k) + 1.0));
}

EscapePoint PartialSumDivergence::escape(double threshold) const {
  if (!(scale > 0.0)) throw UndeterminedError("divergence certificate with zero scale");
  EscapePoint pt;
  pt.block = block;
  double log_k;
  if (form == GrowthForm::kLinear) {
    const double k_real = static_cast<double>(skip) + std::floor(threshold / scale) + 1.0;
    log_k = std::log(k_real);
  } else {
    // smallest K with ln(K+1) > threshold/scale + ln(skip+1)
    log_k = threshold / scale + std::log(static_cast<double>(skip) + 1.0);
  }
  pt.log_position = log_k;
  if (log_k < 42.0) {  // < e^42 ~ 1.7e18: safe in 64 bits
    std::uint64_t k;
    if (form == GrowthForm::kLinear) {
      k = skip + static_cast<std::uint64_t>(std::floor(threshold / scale)) + 1;
    } else {
      k = static_cast<std::uint64_t>(std::floor(std::exp(log_k)));
      while (std::log(static_cast<double>(k) + 1.0) <= log_k) ++k;  // strict crossing
      pt.log_position = std::log(static_cast<double>(k));
    }
    pt.position = k;
    try {
      pt.index = IndexFamily::index_of(block == 0 ? 0 : block, k);
      pt.log_index = std::log(static_cast<double>(*pt.index));
    } catch (const std::overflow_error&) {
      pt.index.reset();
    }
  }
  if (!pt.index) {
    const double lg2 = block == 0 ? 0.0 : static_cast<double>(block - 1) * std::log(2.0);
    pt.log_index = lg2 + std::log(2.0) + pt.log_position;  // n <= 2^block * k
  }
  return pt;
}

Index NonVanishingDivergence::witness_beyond(Index beyond) const {
  const std::uint64_t k0 = IndexFamily::positions_at_or_below(block == 0 ? 1 : block, beyond);
  return IndexFamily::index_of(block == 0 ? 1 : block, std::max<std::uint64_t>(k0 + 1, skip + 1));
}

double RadialBlowupDivergence::log2_inv_one_minus_r_for(double threshold) const {
  const double w = std::min(window, dominance_one_minus_r);
  const double base = std::log2(1.0 / w);
  const double gq = gamma * q;
  if (gq > 1.05) {
    // one-sided window |theta-omega| <= 1-r:
    //   integral >= (coeff/2)^q * 2^(-gq) * (1-r)^(1-gq)
    const double log2_m = std::log2(threshold) + q * std::log2(2.0 / coeff_abs) + gq;
    return std::max(base + 1.0, log2_m / (gq - 1.0));
  }
  // dyadic shells, each contributing at least (coeff/2)^q / 4 when gq >= 1
  const double shell = std::pow(coeff_abs / 2.0, q) / 4.0;
  const double shells_needed = std::floor(threshold / shell) + 1.0;
  return base + shells_needed + 1.0;
}

std::string describe(const Verdict& v) {
  if (const auto* in = std::get_if<CertifiedIn>(&v)) {
    return "certified-in (bound " + std::to_string(in->upper_bound) + ")";
  }
  if (std::holds_alternative<CertifiedOut>(v)) return "certified-out";
  const auto& u = std::get<Undetermined>(v);
  return "undetermined (partial sum " + std::to_string(u.partial_sum) + " at " +
         std::to_string(u.truncation) + ")";
}

}  // namespace genlab
