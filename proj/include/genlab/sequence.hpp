#ifndef GENLAB_SEQUENCE_HPP_
#define GENLAB_SEQUENCE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "genlab/certificate.hpp"
#include "genlab/rational.hpp"

namespace genlab {

/// A lazily evaluated total map {1, 2, ...} -> C together with a tail
/// certificate.  Values are immutable after construction; copies share the
/// underlying evaluators.  Sequences built from exact rational data also
/// carry an exact evaluator used by the exact testing tier.
class ComplexSeq {
 public:
  using Eval = std::function<Complex(Index)>;
  using ExactEval = std::function<RationalComplex(Index)>;

  ComplexSeq() : ComplexSeq(zero()) {}
  ComplexSeq(Eval eval, TailCertificate cert, ExactEval exact = nullptr)
      : eval_(std::move(eval)), exact_(std::move(exact)), cert_(std::move(cert)) {}

  Complex at(Index n) const {
    if (n == 0) throw UsageError("sequence indices are 1-based");
    return eval_(n);
  }
  bool has_exact() const { return static_cast<bool>(exact_); }
  RationalComplex at_exact(Index n) const {
    if (!exact_) throw UsageError("sequence has no exact evaluator");
    if (n == 0) throw UsageError("sequence indices are 1-based");
    return exact_(n);
  }
  const TailCertificate& certificate() const { return cert_; }

  // -- constructors -----------------------------------------------------

  static ComplexSeq zero();

  /// Entries vals[0], vals[1], ... at indices 1, 2, ...; zero beyond.
  static ComplexSeq finite_support(std::vector<Complex> vals);
  static ComplexSeq finite_support_exact(std::vector<RationalComplex> vals);

  /// The unit vector e_n.
  static ComplexSeq unit(Index n);

  /// n^(-gamma) on all of N (gamma > 0).
  static ComplexSeq power_law(double gamma);

  /// k^(-gamma) at the k-th element of canonical block A_j, zero elsewhere.
  static ComplexSeq power_law_on_block(double gamma, BlockId j);

  /// Constant c_m on every element of block A_m (certificate BlockConstant).
  static ComplexSeq block_constant(BlockConstantCert cert);

  /// A sequence with no analytic certificate.
  static ComplexSeq opaque(Eval eval);

 private:
  Eval eval_;
  ExactEval exact_;
  TailCertificate cert_;
};

/// Pointwise combination sum_i coeffs[i] * seqs[i].  Zero-coefficient terms
/// are dropped before the certificate is formed; an all-finite-support
/// combination folds to FiniteSupport{max n_max}; any surviving opaque input
/// degrades the certificate to Opaque.
ComplexSeq linear_combine(std::span<const Complex> coeffs, std::span<const ComplexSeq> seqs);

/// Exact-coefficient overload; propagates the exact evaluator when every
/// surviving input has one.
ComplexSeq linear_combine(std::span<const RationalComplex> coeffs, std::span<const ComplexSeq> seqs);

}  // namespace genlab

#endif  // GENLAB_SEQUENCE_HPP_
