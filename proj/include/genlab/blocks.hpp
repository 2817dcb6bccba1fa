#ifndef GENLAB_BLOCKS_HPP_
#define GENLAB_BLOCKS_HPP_

#include <utility>

#include "genlab/common.hpp"

namespace genlab {

/// Canonical family of pairwise disjoint infinite blocks covering N:
/// block j at position k holds the index n = 2^(j-1) * (2k-1).
/// A_1 is the odd numbers, A_2 = 2*odds, and so on; (j, k) <-> n is a
/// bijection.  Block id 0 stands for "all of N" with position == index.
struct IndexFamily {
  static Index index_of(BlockId j, std::uint64_t k) {
    if (j == 0) {
      if (k == 0) throw UsageError("index_of: position must be >= 1");
      return k;
    }
    if (k == 0) throw UsageError("index_of: position must be >= 1");
    if (j > 64) throw std::overflow_error("index_of: block id too large for 64-bit indices");
    const Index odd = 2 * k - 1;  // wraps only if k > 2^63, caught below
    if (k > (std::numeric_limits<Index>::max() / 2)) throw std::overflow_error("index_of: position overflow");
    if (j > 1 && odd > (std::numeric_limits<Index>::max() >> (j - 1))) {
      throw std::overflow_error("index_of: index overflow");
    }
    return odd << (j - 1);
  }

  /// Inverse of index_of for block ids >= 1.
  static std::pair<BlockId, std::uint64_t> block_of(Index n) {
    if (n == 0) throw UsageError("block_of: index must be >= 1");
    BlockId j = 1;
    while ((n & 1u) == 0) {
      n >>= 1;
      ++j;
    }
    return {j, (n + 1) / 2};
  }

  /// Number of positions of block j whose index is <= n.
  static std::uint64_t positions_at_or_below(BlockId j, Index n) {
    if (j == 0) return n;
    if (j > 64) return 0;
    const Index scaled = n >> (j - 1);
    return (scaled + 1) / 2;
  }
};

inline Index index_of(BlockId j, std::uint64_t k) { return IndexFamily::index_of(j, k); }
inline std::pair<BlockId, std::uint64_t> block_of(Index n) { return IndexFamily::block_of(n); }

}  // namespace genlab

#endif  // GENLAB_BLOCKS_HPP_
