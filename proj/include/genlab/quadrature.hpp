#ifndef GENLAB_QUADRATURE_HPP_
#define GENLAB_QUADRATURE_HPP_

#include <optional>
#include <string>

#include "genlab/hardy.hpp"

namespace genlab {

/// Result of one arc integration.  error_estimate is the summed
/// Gauss-Kronrod discrepancy over the final partition; tolerances are
/// relative (scaled by max(1, |value|)).  refinement_trace records
/// (panel count, running value) snapshots as the adaptive pass progresses.
/// When refined_value is present it is the value recomputed after one global
/// halving of the final partition (requested via QuadratureOptions).
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  bool flagged = false;
  std::string flag_reason;
  std::vector<std::pair<int, double>> refinement_trace;
  std::optional<double> refined_value;

  double hi() const { return widen_up(value + error_estimate); }
  double lo() const { return widen_down(value - error_estimate); }
};

struct QuadratureOptions {
  int panel_budget = 60000;
  bool global_refine = false;  // also report the one-step-halved value
  PhaseConvention convention = PhaseConvention::kPrincipal;
};

/// Adaptive Gauss-Kronrod quadrature of the arc integral
///   int_arc |f(r e^{i theta})|^q d theta,   0 < r < 1,
/// with panels seeded geometrically toward every in-arc singular direction
/// and evaluation anchored locally there (full relative precision in
/// theta - omega down to denormal offsets).  Non-convergence within the
/// panel budget flags the result instead of failing.
QuadratureResult circle_integral(const HardyFn& f, double r, const Arc& arc, double q, double tol,
                                 const QuadratureOptions& opts = {});

/// The boundary integral int_arc |f(e^{i theta})|^q d theta at r = 1.
/// Every in-arc singular direction must satisfy gamma * q < 1 (otherwise the
/// integral diverges and this throws UsageError); integrable endpoint
/// singularities are handled by a power substitution per singular window.
QuadratureResult boundary_integral(const HardyFn& f, const Arc& arc, double q, double tol,
                                   const QuadratureOptions& opts = {});

}  // namespace genlab

#endif  // GENLAB_QUADRATURE_HPP_
