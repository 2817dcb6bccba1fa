#ifndef GENLAB_SPACES_HPP_
#define GENLAB_SPACES_HPP_

#include <functional>
#include <string>
#include <variant>

#include "genlab/common.hpp"

namespace genlab {

/// The chain under study, for 0 < a < b:
///   linf > c0 > cap(b) > lp(b) > cap(a) > lp(a) > cap(0)
/// where cap(a) is the intersection of all lp with p > a, metrized through a
/// strictly decreasing exponent schedule p_m -> a.

struct LInfSpace {};
struct C0Space {};

struct LpSpace {
  double p = 1.0;  // > 0
};

struct CapAboveSpace {
  double a = 0.0;  // >= 0

  /// p_m for m >= 1; must be strictly decreasing with limit a.  The default
  /// schedule is p_m = a + 1/m.
  std::function<double(int)> schedule;
  bool custom_schedule = false;

  double exponent(int m) const {
    if (schedule) return schedule(m);
    return a + 1.0 / static_cast<double>(m);
  }
};

using SpaceSpec = std::variant<LInfSpace, C0Space, LpSpace, CapAboveSpace>;

inline SpaceSpec linf_space() { return LInfSpace{}; }
inline SpaceSpec c0_space() { return C0Space{}; }
inline SpaceSpec lp_space(double p) {
  if (!(p > 0.0)) throw UsageError("lp space requires p > 0");
  return LpSpace{p};
}
inline SpaceSpec cap_above_space(double a) {
  if (!(a >= 0.0)) throw UsageError("cap-above space requires a >= 0");
  return CapAboveSpace{a, nullptr, false};
}

std::string describe(const SpaceSpec& s);

/// Parses "linf", "c0", "lp:<p>", "cap:<a>".
SpaceSpec parse_space(const std::string& text);

}  // namespace genlab

#endif  // GENLAB_SPACES_HPP_
