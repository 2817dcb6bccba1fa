#ifndef GENLAB_PROFILE_HPP_
#define GENLAB_PROFILE_HPP_

#include <optional>
#include <vector>

#include "genlab/sequence.hpp"

namespace genlab {

/// One power-law contribution: coeff * k^(-gamma) at position k of a block.
struct PowerAtom {
  BlockId block = 0;
  double gamma = 1.0;
  Complex coeff{1.0, 0.0};
};

/// Whether the merged block-constant part is known to vanish everywhere.
enum class BlockZeroState : std::uint8_t { kAllZero, kHasNonzero, kUnknown };

struct MergedBlockPart {
  std::function<Complex(BlockId)> value;
  double sup_abs = 0.0;
  BlockZeroState zero_state = BlockZeroState::kAllZero;
  BlockId nonzero_block = 0;   // valid when kHasNonzero
  Complex nonzero_value{0.0, 0.0};
};

/// Normal form of a tail certificate: for n > finite_prefix the sequence
/// value is exactly (sum of atoms at n) + (block part at n).  Values at
/// n <= finite_prefix carry no analytic content and are evaluated directly.
/// Atoms are merged by (block, gamma) and zero coefficients are dropped.
struct SeqProfile {
  Index finite_prefix = 0;
  std::vector<PowerAtom> atoms;
  std::optional<MergedBlockPart> block_part;
  bool opaque = false;

  bool analytic() const { return !opaque; }
  /// Atoms living on the given block.
  std::vector<PowerAtom> atoms_on(BlockId j) const;
  /// Exact value of the block-constant part on block j (0 if absent).
  Complex block_value(BlockId j) const;
};

/// How many leading blocks are probed for a nonzero constant when merging
/// block parts whose zero state cannot be derived structurally.
inline constexpr BlockId kBlockProbeLimit = 4096;

SeqProfile build_profile(const TailCertificate& cert);
inline SeqProfile build_profile(const ComplexSeq& seq) { return build_profile(seq.certificate()); }

// ---------------------------------------------------------------------------
// Certified bounds derived from a profile.  All upper bounds are outward-
// rounded (kRoundSlack); "nullopt" means no finite bound can be certified.
// ---------------------------------------------------------------------------

/// Upper bound for sum_{k > k0} k^(-s), s > 1, by integral comparison:
/// k0 = 0 -> 1 + 1/(s-1);  k0 >= 1 -> k0^(1-s)/(s-1).
double zeta_tail_upper(double s, std::uint64_t k0);

/// Lower bound ln((K+1)/(k0+1)) <= sum_{k0 < k <= K} 1/k (used by all
/// harmonic-log divergence certificates).
double harmonic_tail_lower(std::uint64_t k0, double log_k_plus_1);

/// Certified upper bound for sum_{n > from} |f(n)|^p.  The finite prefix
/// does not contribute (its indices are <= finite_prefix <= from only when
/// from >= finite_prefix; otherwise the prefix part in (from, finite_prefix]
/// is evaluated directly, which requires the evaluator).
std::optional<double> tail_psum_upper(const ComplexSeq& seq, const SeqProfile& profile, double p,
                                      Index from);

/// Certified upper bound for the full p-sum sum_{n >= 1} |f(n)|^p.
std::optional<double> full_psum_upper(const ComplexSeq& seq, const SeqProfile& profile, double p);

/// Certified upper bound for sup_n |f(n)|.
std::optional<double> sup_upper(const ComplexSeq& seq, const SeqProfile& profile);

/// Divergence certificate for the p-sum of the sequence, if one can be
/// derived: a nonzero block constant (linear growth) or a power atom with
/// gamma * p <= 1 (harmonic-log growth), with dominance over the other
/// contributions on that block established analytically.
std::optional<PartialSumDivergence> psum_divergence(const SeqProfile& profile, double p);

/// Non-vanishing certificate (values bounded away from zero along a block).
std::optional<NonVanishingDivergence> nonvanishing_divergence(const SeqProfile& profile);

/// True when the profile certifies values(n) -> 0.
bool certifies_vanishing(const SeqProfile& profile);

}  // namespace genlab

#endif  // GENLAB_PROFILE_HPP_
