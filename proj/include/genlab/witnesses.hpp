#ifndef GENLAB_WITNESSES_HPP_
#define GENLAB_WITNESSES_HPP_

#include "genlab/membership.hpp"
#include "genlab/sequence.hpp"

namespace genlab {

/// The canonical divergent block sequence y_j for exponent b: value k^(-1/b)
/// at the k-th element of block A_j, zero elsewhere.  Its b-sum over A_j is
/// the harmonic series (divergent) while its p-sum is bounded by
/// 1 + b/(p - b) for every p > b.
ComplexSeq divergent_block_seq(double b, BlockId j);

/// An explicit element separating a strict chain inclusion, with certified
/// verdicts on both sides.
struct WitnessRecord {
  SpaceSpec ambient;
  SpaceSpec subspace;
  ComplexSeq sequence;
  std::string description;
  Verdict verdict_in;   // CertifiedIn the ambient space
  Verdict verdict_out;  // CertifiedOut of the subspace
};

/// Produces the canonical witness for a valid chain pair Y > X:
///   (linf, c0)            -> the constant-ones sequence
///   (c0, cap:b)           -> n^(-1/(b+1))
///   (cap:p, lp:p)         -> n^(-1/p)
///   (lp:p, cap:a), a < p  -> n^(-2/(a+p))
/// Both verdicts are produced by membership and must certify; any other pair
/// is a usage error.
WitnessRecord chain_witness(const SpaceSpec& ambient, const SpaceSpec& subspace);

}  // namespace genlab

#endif  // GENLAB_WITNESSES_HPP_
