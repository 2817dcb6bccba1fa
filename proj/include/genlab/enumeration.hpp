#ifndef GENLAB_ENUMERATION_HPP_
#define GENLAB_ENUMERATION_HPP_

#include <vector>

#include "genlab/rational.hpp"
#include "genlab/sequence.hpp"

namespace genlab {

/// Deterministic bijective enumeration of the finitely supported sequences
/// with entries in Q + iQ (enumeration scheme version 1).
///
/// Index 1 is the zero sequence.  For j >= 2, j - 2 = pair(L - 1, C) where L
/// is the support length (position of the last nonzero entry) and C encodes
/// the entries: C = code(v_L) - 1 for L = 1, and
/// C = pair(code(v_1), pair(code(v_2), ... pair(code(v_{L-1}), code(v_L) - 1)))
/// otherwise.  `pair` is the Cantor pairing and `code` the Q+iQ codec built
/// from the Calkin-Wilf order (see rational.hpp).  The last entry's code is
/// shifted down by one because it is never zero.
struct RationalSeq {
  std::vector<RationalComplex> entries;  // positions 1..L, last entry nonzero

  Index support_bound() const { return entries.size(); }
};

inline constexpr int kEnumerationSchemeVersion = 1;

RationalSeq enumerate_rational(std::uint64_t j);           // j >= 1
std::uint64_t index_of_seq(const RationalSeq& seq);        // exact inverse

/// The j-th element as a ComplexSeq (finite support, exact tier attached).
ComplexSeq enumerate_dense(std::uint64_t j);

/// The same scheme read as polynomial coefficient lists (entry i is the
/// coefficient of z^(i-1)): the j-th polynomial with Q+iQ coefficients.
/// Index 1 is the zero polynomial.
std::vector<RationalComplex> enumerate_polynomial(std::uint64_t j);

}  // namespace genlab

#endif  // GENLAB_ENUMERATION_HPP_
