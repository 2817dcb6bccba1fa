#ifndef GENLAB_SPACEABILITY_HPP_
#define GENLAB_SPACEABILITY_HPP_

#include <map>
#include <variant>

#include "genlab/membership.hpp"
#include "genlab/witnesses.hpp"

namespace genlab {

/// Input rule for a block-constant embedding.  Helpers cover the common
/// cases; the raw form takes any rule plus its certified metadata.
struct BlockConstants {
  std::function<Complex(BlockId)> value;
  double sup_abs = 0.0;
  std::optional<BlockId> first_nonzero;

  /// Finitely many explicit constants (block m -> vals[m-1]), zero beyond.
  static BlockConstants from_list(std::vector<Complex> vals);
  /// The same constant on every block.
  static BlockConstants uniform(Complex c);
};

/// The sequence equal to constants(m) on every element of block A_m.  Under
/// the canonical coding the blocks cover N, so the sequence is total; its
/// sup norm is sup_m |c_m| and it lies in c0 only when all constants vanish.
ComplexSeq block_constant_embed(const BlockConstants& constants);

struct C0Target {};
using SpaceabilityTarget = std::variant<double /* lp(b) */, C0Target>;

/// Basis of a closed subspace avoiding the target: element j is supported
/// exactly on block A_j, certified in the ambient space and out of the
/// target.
struct SpaceableBasis {
  SpaceSpec ambient;
  SpaceabilityTarget target;
  std::vector<ComplexSeq> elements;
  std::vector<Verdict> verdicts_in;
  std::vector<Verdict> verdicts_out;
};

/// Divergent block sequences y_j = k^(-1/b) on A_j for j = 1..count.  The
/// ambient must strictly contain lp(b) in the chain: lp(q) with q > b,
/// cap(a) with a >= b, c0, or linf.
SpaceableBasis spaceable_basis(const SpaceSpec& ambient, double b, std::uint64_t count);

/// Indicator sequences of the blocks A_j: the basis for (linf, c0).
SpaceableBasis block_indicator_basis(std::uint64_t count);

/// Chooses a basis for an arbitrary chain pair Y > X: the indicator route
/// for X = c0, the divergent-block route for X = lp(b), and an intermediate
/// exponent b in (a, .) for X = cap(a).
SpaceableBasis spaceable_for_pair(const SpaceSpec& ambient, const SpaceSpec& avoided,
                                  std::uint64_t count);

// ---------------------------------------------------------------------------
// Coefficient recovery (the Prop-5 closure argument, run pointwise).
// ---------------------------------------------------------------------------

struct BlockConsistent {
  Complex c{0.0, 0.0};
  std::optional<RationalComplex> c_exact;  // present on the exact tier
};
struct BlockMismatch {
  std::uint64_t position = 0;              // first disagreeing block position
  std::vector<Complex> ratios;
};
struct BlockRatioReport {
  BlockId block = 0;
  std::variant<BlockConsistent, BlockMismatch> result;

  bool consistent() const { return std::holds_alternative<BlockConsistent>(result); }
};

struct DecomposeReport {
  std::vector<BlockRatioReport> blocks;
  bool all_consistent = true;

  std::vector<Complex> coefficients() const;
};

inline constexpr double kRatioTolerance = 1e-9;  // relative, floating tier

/// Per-block ratios f(n)/y_j(n) over the first K positions of each basis
/// block.  Blocks where f vanishes report coefficient 0; ratios must agree
/// within kRatioTolerance (relative) on the floating tier and exactly on the
/// exact tier (both sequences carrying exact evaluators).
DecomposeReport decompose(const ComplexSeq& f, const SpaceableBasis& basis, std::uint64_t K);

/// Certified escape for a combination sum c_j y_j with some c_j != 0: for an
/// lp(b) target, the partial b-sum over the chosen block exceeds M at the
/// certified position; for the c0 target, the values stay at |c_j| on an
/// infinite block (non-vanishing certificate).
struct SpaceableEscape {
  BlockId block = 0;
  DivergenceCertificate evidence;
  std::optional<EscapePoint> point;  // present for lp targets
  double threshold = 0.0;
  std::string derivation;
};

SpaceableEscape verify_spaceable_combo(std::span<const Complex> coeffs,
                                       const SpaceableBasis& basis, double M);

}  // namespace genlab

#endif  // GENLAB_SPACEABILITY_HPP_
