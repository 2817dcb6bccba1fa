#ifndef GENLAB_COMMON_HPP_
#define GENLAB_COMMON_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace genlab {

using Complex = std::complex<double>;
using Index = std::uint64_t;    // sequence indices, 1-based
using BlockId = std::uint64_t;  // disjoint-block ids, 1-based; 0 = "all of N"

/// Thrown when an operation is called outside its contract
/// (bad parameters, invalid chain pair, |z| >= 1, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an operation cannot produce a certified result because the
/// inputs carry no usable analytic information (e.g. an opaque certificate
/// where a summability bound is required).
class UndeterminedError : public std::runtime_error {
 public:
  explicit UndeterminedError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// All certified floating-point bounds are widened outward by this relative
// slack to absorb rounding in the summation/quadrature kernels.  Accumulators
// use compensated summation, so the true rounding error is orders of
// magnitude below the slack.
inline constexpr double kRoundSlack = 1e-12;

inline double widen_up(double x) {
  if (!std::isfinite(x)) return x;
  return x >= 0 ? x * (1.0 + kRoundSlack) : x * (1.0 - kRoundSlack);
}
inline double widen_down(double x) {
  if (!std::isfinite(x)) return x;
  return x >= 0 ? x * (1.0 - kRoundSlack) : x * (1.0 + kRoundSlack);
}

/// Neumaier compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Two-sided enclosure of a real quantity.  hi == +inf is the sentinel for
/// "no certified upper bound" (opaque tails).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool unbounded() const { return !std::isfinite(hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Default truncation for partial sums where nothing better is requested.
/// Overridable through the GENLAB_TRUNCATION environment variable.
Index default_truncation();

}  // namespace genlab

#endif  // GENLAB_COMMON_HPP_
