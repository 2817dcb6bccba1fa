// Brute-force reference implementations used only by tests.  These stay
// independent of the library's certified fast paths: sums are direct, and the
// quadrature oracle is a graded trapezoid rule evaluating through the plain
// (unanchored) polar path.
#ifndef GENLAB_TESTS_ORACLES_HPP_
#define GENLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "genlab/blocks.hpp"
#include "genlab/hardy.hpp"
#include "genlab/sequence.hpp"

namespace genlab::oracles {

inline double naive_psum(const ComplexSeq& f, double p, Index upto) {
  KahanSum acc;
  for (Index n = 1; n <= upto; ++n) {
    const double m = std::abs(f.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
  }
  return acc.value();
}

inline double naive_lp_distance(const ComplexSeq& f, const ComplexSeq& g, double p, Index upto) {
  KahanSum acc;
  for (Index n = 1; n <= upto; ++n) {
    const double m = std::abs(f.at(n) - g.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
  }
  return p >= 1.0 ? std::pow(acc.value(), 1.0 / p) : acc.value();
}

/// First index where the running sum of |g(n)|^p (restricted to a block when
/// block != 0) exceeds the threshold; scans positions 1..limit.
inline std::optional<std::uint64_t> direct_block_crossing(const ComplexSeq& g, double p,
                                                          BlockId block, double threshold,
                                                          std::uint64_t limit) {
  KahanSum acc;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    const Index n = block == 0 ? k : index_of(block, k);
    const double m = std::abs(g.at(n));
    if (m > 0.0) acc.add(std::pow(m, p));
    if (acc.value() > threshold) return k;
  }
  return std::nullopt;
}

/// Graded trapezoid quadrature of int_arc |f(r e^{i t})|^q dt: a uniform grid
/// joined with geometric clusters around every in-arc singular direction.
inline double trapezoid_circle_integral(const HardyFn& f, double r, const Arc& arc, double q,
                                        int uniform_points = 200000) {
  const double a = arc.a;
  const double b = arc.is_full() ? arc.a + 2.0 * 3.14159265358979323846 : arc.b;
  std::vector<double> xs;
  xs.reserve(uniform_points + 4096);
  for (int i = 0; i <= uniform_points; ++i) {
    xs.push_back(a + (b - a) * static_cast<double>(i) / uniform_points);
  }
  for (auto [pos, idx] : singular_directions_in(f, Arc{a, b})) {
    double h = (b - a) / 4.0;
    for (int k = 0; k < 52; ++k) {
      if (pos - h > a) xs.push_back(pos - h);
      if (pos + h < b) xs.push_back(pos + h);
      h *= 0.5;
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto integrand = [&](double t) {
    return std::pow(std::abs(f.eval_polar(r, t)), q);
  };
  KahanSum acc;
  double prev_x = xs.front();
  double prev_v = integrand(prev_x);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double x = xs[i];
    const double v = integrand(x);
    acc.add(0.5 * (prev_v + v) * (x - prev_x));
    prev_x = x;
    prev_v = v;
  }
  return acc.value();
}

}  // namespace genlab::oracles

#endif  // GENLAB_TESTS_ORACLES_HPP_
