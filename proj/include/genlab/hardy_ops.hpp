#ifndef GENLAB_HARDY_OPS_HPP_
#define GENLAB_HARDY_OPS_HPP_

#include "genlab/certificate.hpp"
#include "genlab/enumeration.hpp"
#include "genlab/quadrature.hpp"

namespace genlab {

// ---------------------------------------------------------------------------
// Localized growth probes (the E_{M,r} machinery).
// ---------------------------------------------------------------------------

struct RadialSample {
  int t = 0;
  double r = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool flagged = false;
};

struct ThresholdCrossing {
  double threshold = 0.0;
  std::optional<int> first_t;             // least t with value > threshold
  std::vector<bool> inside;               // E_{M,r_t} membership per schedule entry
};

struct GrowthReport {
  std::vector<RadialSample> trace;
  std::vector<ThresholdCrossing> thresholds;
  std::optional<double> slope;            // log-log slope over the top half
  bool any_flagged = false;
};

/// Sweeps the radial schedule, reports the localized q-integral trace,
/// per-threshold E_{M,r} membership and first crossings, and the
/// least-squares slope of log I(r_t) against log 1/(1-r_t) over the top half
/// of the schedule.
GrowthReport localized_growth(const HardyFn& f, const Arc& arc, double q,
                              const RadialSchedule& schedule, std::span<const double> thresholds,
                              double tol = 1e-8, const QuadratureOptions& opts = {});

// ---------------------------------------------------------------------------
// Membership and metric.
// ---------------------------------------------------------------------------

/// Analytic verdict for membership in H^q restricted to the closed arc:
/// every in-arc singular direction (endpoints count; at a shared omega the
/// largest gamma governs) must satisfy gamma*q < 1 for CertifiedIn, and any
/// in-arc direction with gamma*q >= 1 yields CertifiedOut with a radial
/// blow-up certificate.  Polynomials are always in.
Verdict hardy_membership(const HardyFn& f, double q, const Arc& arc);

struct HardyDistance {
  double value = 0.0;          // +inf when the difference leaves H^p
  bool infinite = false;
  double error = 0.0;          // quadrature error transported to the metric
  QuadratureResult boundary;   // the r = 1 integral behind the value
  std::vector<RadialSample> radial_trace;
  bool monotone_ok = true;     // nondecreasing radial means (runtime check)
  bool flagged = false;
};

/// The H^p metric: sup_r (int |f-g|^p)^{1/p} for p >= 1 and
/// sup_r int |f-g|^p for 0 < p < 1, both with the unnormalized measure
/// d theta.  The sup is realized as the boundary integral at r = 1 (the
/// radial means are nondecreasing; the schedule sweep verifies this at run
/// time and flags violations).
HardyDistance hardy_distance(const HardyFn& f, const HardyFn& g, double p, double tol = 1e-8,
                             const RadialSchedule& schedule = {});

// ---------------------------------------------------------------------------
// The dense avoiding basis (elements P_n + f_n).
// ---------------------------------------------------------------------------

struct DenseAvoidingElement {
  std::uint64_t n = 1;
  double omega = 0.0;            // 1/n
  double c = 1.0;                // 2^(-t), the singular coefficient
  int c_exponent = 0;
  double certified_dp = 0.0;     // certified bound for d_p(f_n, 0), < 1/n
  std::vector<RationalComplex> poly;  // P_n
  HardyFn element;               // P_n + f_n
  HardyFn singular_only;         // f_n
};

struct DenseAvoidingBasis {
  double p = 1.0;
  double q = 2.0;
  double gamma = 0.75;  // (1/p + 1/q)/2
  std::vector<DenseAvoidingElement> elements;
};

/// gamma = (1/p + 1/q)/2 (so gamma*p < 1 < gamma*q strictly); omega_n = 1/n;
/// c_n is the largest power of two whose certified metric bound satisfies
/// d_p(f_n, 0) < 1/n; P_n is the n-th polynomial of the fixed enumeration.
DenseAvoidingBasis dense_avoiding_basis(double p, double q, std::uint64_t count, double tol = 1e-8);

struct ContributionTrace {
  std::uint64_t k = 1;
  std::vector<RadialSample> trace;  // |lambda_k (P_k + f_k)|^q over the arc
  bool stabilized = false;          // last two values within 1% relative
};

struct DenseAvoidingVerification {
  Arc arc;
  std::uint64_t n = 1;  // the level whose omega the arc isolates
  std::vector<ContributionTrace> lower_terms;   // k = 1..N-1
  std::vector<RadialSample> combination_trace;  // |L|^q over the arc
  std::optional<int> crossing_t;                // least t with the trace > threshold
  double threshold = 0.0;
  bool all_lower_stabilized = true;
  bool crossed = false;
  bool any_flagged = false;
  std::string conclusion;
};

/// Shared per-basis data for repeated verifications at the same level N.
struct DenseAvoidingContext {
  Arc arc;
  std::uint64_t n = 1;
  RadialSchedule schedule;
  std::vector<std::vector<RadialSample>> unit_traces;  // |P_k + f_k|^q, k < N
};

DenseAvoidingContext prepare_dense_avoiding(const DenseAvoidingBasis& basis, std::uint64_t n,
                                            const RadialSchedule& schedule, double tol = 1e-8);

/// Verifies the Hardy-space escape of L = sum lambda_k (P_k + f_k)
/// (lambda_N != 0): every k < N contribution has a stabilizing localized
/// q-trace on the auto-selected arc around omega_N, while the combination's
/// localized q-integral is expected to exceed the threshold at some scheduled
/// radius; the full-circle sup dominates the localized integral, so a
/// crossing certifies escape from H^q.
DenseAvoidingVerification verify_dense_avoiding(std::span<const RationalComplex> lambda,
                                                const DenseAvoidingBasis& basis,
                                                const DenseAvoidingContext& context, double threshold,
                                                double tol = 1e-8);

/// Convenience overload preparing the context internally.
DenseAvoidingVerification verify_dense_avoiding(std::span<const RationalComplex> lambda,
                                                const DenseAvoidingBasis& basis,
                                                const RadialSchedule& schedule, double threshold,
                                                double tol = 1e-8);

/// The auto-selected arc isolating omega_N = 1/N from the other basis
/// directions: [(1/N + 1/(N+1))/2, (1/N + 1/(N-1))/2] for N >= 2 and
/// [(1 + 1/2)/2, (1 + pi)/2] for N = 1.
Arc dense_avoiding_arc(std::uint64_t n);

// ---------------------------------------------------------------------------
// Theorem-A style candidate witness with probe report.
// ---------------------------------------------------------------------------

struct TheoremAProbeConfig {
  std::vector<double> below_q;      // clause-1 exponents (default {p/2})
  std::vector<double> at_or_above;  // clause-2 exponents (default {p})
  std::vector<double> thresholds;   // clause-2 threshold schedule
  RadialSchedule schedule;
  double tol = 1e-8;
  double refine_stability = 1e-4;   // clause-1 panel-refinement tolerance
};

struct TheoremAClause1 {
  double q = 0.0;
  double boundary_value = 0.0;
  double refined_delta = 0.0;  // |value - value after global halving|
  bool stable = false;
  std::vector<RadialSample> trace;
};

struct TheoremAClause2 {
  std::size_t term = 0;      // which omega_k the arc surrounds
  double delta_exponent = 0.0;
  GrowthReport growth;
};

struct TheoremAWitness {
  double p = 1.0;
  double gamma = 1.0;  // 1/p
  std::vector<double> omegas;    // 2pi * dyadic enumeration
  std::vector<double> epsilons;  // powers of two
  HardyFn fn;
  std::vector<TheoremAClause1> clause1;
  std::vector<TheoremAClause2> clause2;
};

/// Dyadic direction enumeration 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, 1/16, ...
double dyadic_fraction(std::uint64_t k);

/// f = sum_{k<=K} eps_k (z - e^{i omega_k})^(-1/p) with eps_k the largest
/// power of two whose contribution to the H^{q_m} size stays below 2^(-k)
/// for every m <= k (q_m from the supplied schedule, default p*m/(m+1)).
TheoremAWitness theoremA_witness(double p, std::uint64_t K,
                                 std::function<double(int)> q_schedule = nullptr,
                                 const TheoremAProbeConfig& config = {});

}  // namespace genlab

#endif  // GENLAB_HARDY_OPS_HPP_
