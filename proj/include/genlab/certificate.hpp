#ifndef GENLAB_CERTIFICATE_HPP_
#define GENLAB_CERTIFICATE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "genlab/common.hpp"

namespace genlab {

// ---------------------------------------------------------------------------
// Tail certificates: the analytic facts attached to a sequence that make
// verdicts beyond any truncation possible.
// ---------------------------------------------------------------------------

/// values(n) == 0 for all n > n_max.
struct FiniteSupportCert {
  Index n_max = 0;
};

/// values at the k-th element of block A_j equal k^(-gamma); zero off A_j.
/// block == 0 means the full run: values(n) = n^(-gamma).
struct PowerLawCert {
  double gamma = 1.0;  // > 0
  BlockId block = 0;
};

/// Constant c_m on every element of block A_m.  The union of the canonical
/// blocks is all of N, so the sequence is totally defined.  Because the rule
/// may cover infinitely many blocks it is a function, with certified metadata
/// alongside: sup_abs bounds sup_m |c_m|; first_nonzero is the least block
/// with a nonzero constant (nullopt == all constants vanish).
struct BlockConstantCert {
  std::function<Complex(BlockId)> constants;
  double sup_abs = 0.0;
  std::optional<BlockId> first_nonzero;
};

struct LinearCombinationCert;

/// No analytic information; verdicts degrade to Undetermined.
struct OpaqueCert {};

class TailCertificate {
 public:
  using Storage = std::variant<FiniteSupportCert, PowerLawCert, BlockConstantCert,
                               std::shared_ptr<LinearCombinationCert>, OpaqueCert>;

  TailCertificate() : storage_(OpaqueCert{}) {}
  TailCertificate(FiniteSupportCert c) : storage_(std::move(c)) {}            // NOLINT
  TailCertificate(PowerLawCert c);                                            // NOLINT
  TailCertificate(BlockConstantCert c) : storage_(std::move(c)) {}            // NOLINT
  TailCertificate(LinearCombinationCert c);                                   // NOLINT
  TailCertificate(OpaqueCert c) : storage_(c) {}                              // NOLINT

  const Storage& storage() const { return storage_; }
  bool is_opaque() const { return std::holds_alternative<OpaqueCert>(storage_); }
  const FiniteSupportCert* finite_support() const { return std::get_if<FiniteSupportCert>(&storage_); }
  const PowerLawCert* power_law() const { return std::get_if<PowerLawCert>(&storage_); }

 private:
  Storage storage_;
};

/// Sum of scaled certified sequences.  Terms never reference opaque
/// certificates: combining with an opaque input degrades the whole
/// certificate to Opaque instead.
struct LinearCombinationCert {
  std::vector<std::pair<Complex, TailCertificate>> terms;
};

inline TailCertificate::TailCertificate(PowerLawCert c) : storage_(c) {
  if (!(c.gamma > 0.0)) throw UsageError("PowerLaw certificate requires gamma > 0");
}
inline TailCertificate::TailCertificate(LinearCombinationCert c)
    : storage_(std::make_shared<LinearCombinationCert>(std::move(c))) {}

// ---------------------------------------------------------------------------
// Divergence evidence and verdicts.
// ---------------------------------------------------------------------------

enum class GrowthForm : std::uint8_t {
  kHarmonicLog,  // partial sums over the first K block positions >= scale * (ln(K+1) - ln(skip+1))
  kLinear,       // partial sums >= scale * (K - skip)
};

/// Where a certified crossing happens.  Positions can be astronomically
/// large, so the primitive datum is ln(position); the integer fields are
/// filled in only when they fit.
struct EscapePoint {
  double log_position = 0.0;  // ln K, K = block position of the certified crossing
  double log_index = 0.0;     // ln n, n = index_of(block, K)
  BlockId block = 0;
  std::optional<std::uint64_t> position;
  std::optional<std::uint64_t> index;
};

/// The p-sum along a block grows without bound at a known analytic rate.
struct PartialSumDivergence {
  double exponent = 1.0;  // the p whose p-sum diverges
  BlockId block = 0;
  GrowthForm form = GrowthForm::kHarmonicLog;
  double scale = 1.0;
  std::uint64_t skip = 0;  // block positions excluded at the start
  std::string note;

  /// Certified lower bound for the p-sum over block positions (skip, K].
  double lower_bound(std::uint64_t k) const;
  /// Smallest certified K with lower_bound(K) > threshold, in log form.
  EscapePoint escape(double threshold) const;
};

/// |f| >= floor_abs at every block position beyond skip: the values do not
/// vanish at infinity.
struct NonVanishingDivergence {
  BlockId block = 0;
  double floor_abs = 0.0;
  std::uint64_t skip = 0;
  std::string note;

  /// An explicit index n > beyond where |f(n)| >= floor_abs.
  Index witness_beyond(Index beyond) const;
};

/// Hardy-space evidence: the localized q-integral around the singular
/// direction omega exceeds any threshold as r -> 1.  Derived from the
/// one-sided dominance window |theta - omega| <= window where the singular
/// term of modulus coeff_abs * rho^(-gamma) is at least twice the rest.
struct RadialBlowupDivergence {
  double q = 1.0;
  double gamma = 1.0;
  double omega = 0.0;
  double coeff_abs = 1.0;
  double window = 0.1;                  // usable angular half-width
  double dominance_one_minus_r = 0.1;   // dominance requires 1-r below this
  std::string note;

  /// Certified log2(1/(1-r)) such that the localized q-integral exceeds M.
  double log2_inv_one_minus_r_for(double threshold) const;
};

using DivergenceCertificate =
    std::variant<PartialSumDivergence, NonVanishingDivergence, RadialBlowupDivergence>;

struct CertifiedIn {
  double upper_bound = 0.0;
  std::string derivation;
};
struct CertifiedOut {
  DivergenceCertificate evidence;
};
struct Undetermined {
  double partial_sum = 0.0;
  Index truncation = 0;
};

using Verdict = std::variant<CertifiedIn, CertifiedOut, Undetermined>;

inline bool is_certified_in(const Verdict& v) { return std::holds_alternative<CertifiedIn>(v); }
inline bool is_certified_out(const Verdict& v) { return std::holds_alternative<CertifiedOut>(v); }
inline bool is_undetermined(const Verdict& v) { return std::holds_alternative<Undetermined>(v); }

std::string describe(const Verdict& v);

}  // namespace genlab

#endif  // GENLAB_CERTIFICATE_HPP_
