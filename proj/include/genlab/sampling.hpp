#ifndef GENLAB_SAMPLING_HPP_
#define GENLAB_SAMPLING_HPP_

#include <random>
#include <vector>

#include "genlab/rational.hpp"

namespace genlab {

/// Seeded sampler for small Q+iQ coefficients.  Draws go through explicit
/// modular reduction of the raw mt19937_64 stream (never through
/// distribution objects), so identical seeds give identical coefficients on
/// every platform.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int num_range = 9, int den_range = 9) {
    const auto num = static_cast<std::int64_t>(rng_() % (2 * num_range + 1)) - num_range;
    const auto den = static_cast<std::int64_t>(rng_() % den_range) + 1;
    return Rational(num, den);
  }

  RationalComplex rational_complex(int num_range = 9, int den_range = 9) {
    return {rational(num_range, den_range), rational(num_range, den_range)};
  }

  RationalComplex nonzero_rational_complex(int num_range = 9, int den_range = 9) {
    for (;;) {
      RationalComplex v = rational_complex(num_range, den_range);
      if (!v.is_zero()) return v;
    }
  }

  /// Length-n coefficient vector whose last entry is nonzero.
  std::vector<RationalComplex> vector_with_last_nonzero(std::size_t n) {
    std::vector<RationalComplex> out;
    out.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(rational_complex());
    out.push_back(nonzero_rational_complex());
    return out;
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Complex> to_complex(const std::vector<RationalComplex>& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const RationalComplex& x : v) out.push_back(x.to_complex());
  return out;
}

}  // namespace genlab

#endif  // GENLAB_SAMPLING_HPP_
