#include "genlab/hardy_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace genlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::optional<double> loglog_slope(std::span<const RadialSample> rows) {
  std::vector<std::pair<double, double>> pts;
  for (const RadialSample& s : rows) {
    if (s.flagged || !(s.value > 0.0)) continue;
    pts.emplace_back(std::log(1.0 / (1.0 - s.r)), std::log(s.value));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0.0)) return std::nullopt;
  return sxy / sxx;
}

std::vector<RadialSample> sweep(const HardyFn& f, const Arc& arc, double q,
                                const RadialSchedule& schedule, double tol,
                                const QuadratureOptions& opts = {}) {
  std::vector<RadialSample> rows;
  for (int t = schedule.t_min; t <= schedule.t_max; ++t) {
    const double r = RadialSchedule::radius(t);
    const QuadratureResult res = circle_integral(f, r, arc, q, tol, opts);
    rows.push_back({t, r, res.value, res.error_estimate, res.flagged});
  }
  return rows;
}

bool trace_stabilized(std::span<const RadialSample> rows, double rel = 0.01) {
  if (rows.size() < 2) return false;
  const RadialSample& a = rows[rows.size() - 2];
  const RadialSample& b = rows[rows.size() - 1];
  const double scale = std::max({std::abs(b.value), std::abs(a.value), 1e-300});
  return std::abs(b.value - a.value) <= rel * scale + a.error + b.error;
}

}  // namespace

GrowthReport localized_growth(const HardyFn& f, const Arc& arc, double q,
                              const RadialSchedule& schedule, std::span<const double> thresholds,
                              double tol, const QuadratureOptions& opts) {
  GrowthReport report;
  report.trace = sweep(f, arc, q, schedule, tol, opts);
  for (const RadialSample& s : report.trace) report.any_flagged |= s.flagged;

  for (double M : thresholds) {
    ThresholdCrossing cr;
    cr.threshold = M;
    for (const RadialSample& s : report.trace) {
      cr.inside.push_back(s.value <= M);
      if (!cr.first_t && s.value > M) cr.first_t = s.t;
    }
    report.thresholds.push_back(std::move(cr));
  }

  const std::size_t n = report.trace.size();
  const std::size_t top = (n + 1) / 2;
  report.slope = loglog_slope(std::span(report.trace).subspan(n - top));
  return report;
}

namespace {

/// In-arc governing singularities: for directions shared by several terms the
/// largest gamma rules.  Returns (position, term index) pairs.
std::vector<std::pair<double, std::size_t>> governing_directions(const HardyFn& f, const Arc& arc) {
  auto dirs = singular_directions_in(f, arc);
  std::map<double, std::size_t> best;
  for (auto [pos, idx] : dirs) {
    auto it = best.find(pos);
    if (it == best.end() || f.terms()[idx].gamma > f.terms()[it->second].gamma) {
      best[pos] = idx;
    }
  }
  return {best.begin(), best.end()};
}

/// Uniform-in-r lower bound for |r e^{i theta} - e^{i omega}| when the
/// angular distance is at least g.
double distance_floor(double g) {
  return std::min(0.5, std::sqrt(2.0) * std::sin(std::min(g, kPi) / 2.0));
}

/// Uniform-in-r upper bound for the full-circle integral of rho^(-s), s < 1.
double circle_power_bound(double s) {
  const double near = kTwoPi * std::pow(2.0, -0.5 * s) / (1.0 - s);
  const double far = kTwoPi * std::pow(2.0, s);
  return std::max(near, far);
}

double poly_sup(const HardyFn& f) {
  double s = 0.0;
  for (const RationalComplex& c : f.poly()) s += std::abs(c.to_complex());
  return s;
}

}  // namespace

Verdict hardy_membership(const HardyFn& f, double q, const Arc& arc) {
  if (!(q > 0.0)) throw UsageError("hardy_membership: exponent must be > 0");
  const auto governing = governing_directions(f, arc);

  // Certified out: an in-arc direction with gamma*q >= 1.
  for (auto [pos, idx] : governing) {
    const SingularTerm& lead = f.terms()[idx];
    if (lead.gamma * q < 1.0) continue;

    RadialBlowupDivergence ev;
    ev.q = q;
    ev.gamma = lead.gamma;
    ev.omega = lead.omega;
    ev.coeff_abs = std::abs(lead.c);

    double window = 0.5;
    if (!arc.is_full()) {
      const double inside = std::max(arc.b - pos, pos - arc.a);  // one-sided reach
      window = std::min(window, inside);
    }
    double far_sup = poly_sup(f);
    double same_omega_sum = 0.0;
    double same_omega_gamma = 0.0;
    for (std::size_t j = 0; j < f.terms().size(); ++j) {
      if (j == idx) continue;
      const SingularTerm& other = f.terms()[j];
      if (other.omega == lead.omega) {
        same_omega_sum += std::abs(other.c);
        same_omega_gamma = std::max(same_omega_gamma, other.gamma);
        continue;
      }
      window = std::min(window, angular_gap(lead.omega, other.omega) / 2.0);
    }
    for (std::size_t j = 0; j < f.terms().size(); ++j) {
      if (j == idx || f.terms()[j].omega == lead.omega) continue;
      const double g = angular_gap(lead.omega, f.terms()[j].omega) - window;
      far_sup += std::abs(f.terms()[j].c) *
                 std::pow(distance_floor(std::max(g, 1e-12)), -f.terms()[j].gamma);
    }
    double dom = window;  // rho threshold below which the lead term dominates
    if (far_sup > 0.0) {
      dom = std::min(dom, std::pow(ev.coeff_abs / (4.0 * far_sup), 1.0 / lead.gamma));
    }
    if (same_omega_sum > 0.0) {
      dom = std::min(dom, std::pow(ev.coeff_abs / (4.0 * same_omega_sum),
                                   1.0 / (lead.gamma - same_omega_gamma)));
    }
    ev.window = window;
    ev.dominance_one_minus_r = dom;
    std::ostringstream os;
    os << "singular direction omega = " << lead.omega << " inside the closed arc with gamma*q = "
       << lead.gamma * q << " >= 1";
    ev.note = os.str();
    return CertifiedOut{std::move(ev)};
  }

  // Certified in: every in-arc direction integrable; build an analytic
  // sup_r bound for the localized q-integral.
  double bound;
  const double arc_len = arc.length();
  const double psup = poly_sup(f);
  std::vector<double> in_arc_positions;
  for (auto [pos, idx] : governing) in_arc_positions.push_back(pos);

  const auto out_of_arc_floor = [&](const SingularTerm& t) {
    double g = kInf;
    if (arc.is_full()) return 0.0;  // never called for full arcs
    const double lo = arc.a, hi = arc.b;
    // angular distance from omega to the closed arc
    const double to_lo = angular_gap(t.omega, lo);
    const double to_hi = angular_gap(t.omega, hi);
    g = std::min(to_lo, to_hi);
    return distance_floor(g);
  };

  bool undetermined = false;
  if (q <= 1.0) {
    KahanSum acc;
    for (std::size_t j = 0; j < f.terms().size(); ++j) {
      const SingularTerm& t = f.terms()[j];
      const bool inside =
          arc.is_full() ||
          std::any_of(governing.begin(), governing.end(),
                      [&](const auto& pr) { return f.terms()[pr.second].omega == t.omega; });
      if (inside) {
        acc.add(std::pow(std::abs(t.c), q) * circle_power_bound(t.gamma * q));
      } else {
        const double floor = out_of_arc_floor(t);
        if (!(floor > 0.0)) {
          undetermined = true;
          break;
        }
        acc.add(arc_len * std::pow(std::abs(t.c) * std::pow(floor, -t.gamma), q));
      }
    }
    acc.add(arc_len * std::pow(psup, q));
    bound = acc.value();
  } else {
    KahanSum norms;
    for (std::size_t j = 0; j < f.terms().size(); ++j) {
      const SingularTerm& t = f.terms()[j];
      const bool inside =
          arc.is_full() ||
          std::any_of(governing.begin(), governing.end(),
                      [&](const auto& pr) { return f.terms()[pr.second].omega == t.omega; });
      if (inside) {
        norms.add(std::abs(t.c) * std::pow(circle_power_bound(t.gamma * q), 1.0 / q));
      } else {
        const double floor = out_of_arc_floor(t);
        if (!(floor > 0.0)) {
          undetermined = true;
          break;
        }
        norms.add(std::abs(t.c) * std::pow(floor, -t.gamma) * std::pow(arc_len, 1.0 / q));
      }
    }
    norms.add(psup * std::pow(arc_len, 1.0 / q));
    bound = std::pow(norms.value(), q);
  }
  if (undetermined) {
    return Undetermined{0.0, 0};
  }
  std::ostringstream os;
  os << "every in-arc singular direction has gamma*q < 1; sup_r bound assembled from "
        "rho^(-s) integral bounds and polynomial sups";
  return CertifiedIn{widen_up(bound), os.str()};
}

HardyDistance hardy_distance(const HardyFn& f, const HardyFn& g, double p, double tol,
                             const RadialSchedule& schedule) {
  if (!(p > 0.0)) throw UsageError("hardy_distance: exponent must be > 0");
  const HardyFn diff = f - g;
  HardyDistance out;

  const Verdict v = hardy_membership(diff, p, Arc::full_circle());
  if (is_certified_out(v)) {
    out.infinite = true;
    out.value = kInf;
    return out;
  }

  out.boundary = boundary_integral(diff, Arc::full_circle(), p, tol);
  out.flagged = out.boundary.flagged;
  out.radial_trace = sweep(diff, Arc::full_circle(), p, schedule, std::max(tol, 1e-7));

  double prev = -kInf, prev_err = 0.0;
  for (const RadialSample& s : out.radial_trace) {
    if (s.value + s.error + prev_err + 1e-9 * std::max(1.0, prev) < prev) out.monotone_ok = false;
    prev = s.value;
    prev_err = s.error;
    out.flagged |= s.flagged;
  }
  // The boundary value dominates the sweep (radial means are nondecreasing).
  if (!out.radial_trace.empty()) {
    const RadialSample& last = out.radial_trace.back();
    if (last.value > out.boundary.value + out.boundary.error_estimate + last.error) {
      out.monotone_ok = false;
    }
  }

  if (p >= 1.0) {
    out.value = std::pow(out.boundary.value, 1.0 / p);
    out.error = std::pow(out.boundary.hi(), 1.0 / p) - out.value;
  } else {
    out.value = out.boundary.value;
    out.error = out.boundary.hi() - out.value;
  }
  return out;
}

DenseAvoidingBasis dense_avoiding_basis(double p, double q, std::uint64_t count, double tol) {
  if (!(0.0 < p && p < q)) throw UsageError("dense_avoiding_basis: need 0 < p < q");
  if (count < 1) throw UsageError("dense_avoiding_basis: count must be >= 1");
  DenseAvoidingBasis basis;
  basis.p = p;
  basis.q = q;
  basis.gamma = 0.5 * (1.0 / p + 1.0 / q);

  // The metric of a unit singular term is rotation invariant: compute the
  // base size once and scale (the metric is |c|-homogeneous for p >= 1 and
  // |c|^p-homogeneous below).
  const HardyFn unit = HardyFn::singular(Complex{1.0, 0.0}, 0.0, basis.gamma);
  const HardyDistance base = hardy_distance(unit, HardyFn{}, p, tol);
  if (base.infinite || base.flagged) {
    throw UndeterminedError("dense_avoiding_basis: base metric integral failed to certify");
  }
  const double base_hi = base.value + base.error;

  for (std::uint64_t n = 1; n <= count; ++n) {
    DenseAvoidingElement el;
    el.n = n;
    el.omega = 1.0 / static_cast<double>(n);
    const double need = 1.0 / static_cast<double>(n);
    int t = 0;
    const auto certified = [&](int tt) {
      const double c = std::pow(2.0, -tt);
      return p >= 1.0 ? c * base_hi : std::pow(c, p) * base_hi;
    };
    while (t <= 2048 && !(certified(t) < need)) ++t;
    if (t > 2048) throw UndeterminedError("dense_avoiding_basis: coefficient search failed");
    el.c = std::pow(2.0, -t);
    el.c_exponent = t;
    el.certified_dp = certified(t);
    el.poly = enumerate_polynomial(n);
    el.singular_only = HardyFn::singular(Complex{el.c, 0.0}, el.omega, basis.gamma);
    el.element = HardyFn::polynomial(el.poly) + el.singular_only;
    basis.elements.push_back(std::move(el));
  }
  return basis;
}

Arc dense_avoiding_arc(std::uint64_t n) {
  if (n == 0) throw UsageError("dense_avoiding_arc: level must be >= 1");
  const double nd = static_cast<double>(n);
  const double a = 0.5 * (1.0 / nd + 1.0 / (nd + 1.0));
  const double b = n >= 2 ? 0.5 * (1.0 / nd + 1.0 / (nd - 1.0)) : 0.5 * (1.0 + kPi);
  return make_arc(a, std::min(b, kTwoPi - 1e-9));
}

DenseAvoidingContext prepare_dense_avoiding(const DenseAvoidingBasis& basis, std::uint64_t n,
                                            const RadialSchedule& schedule, double tol) {
  if (n == 0 || n > basis.elements.size()) {
    throw UsageError("prepare_dense_avoiding: level outside the basis");
  }
  DenseAvoidingContext ctx;
  ctx.arc = dense_avoiding_arc(n);
  ctx.n = n;
  ctx.schedule = schedule;
  for (std::uint64_t k = 1; k < n; ++k) {
    ctx.unit_traces.push_back(
        sweep(basis.elements[k - 1].element, ctx.arc, basis.q, schedule, tol));
  }
  return ctx;
}

DenseAvoidingVerification verify_dense_avoiding(std::span<const RationalComplex> lambda,
                                                const DenseAvoidingBasis& basis,
                                                const DenseAvoidingContext& context,
                                                double threshold, double tol) {
  if (lambda.empty()) throw UsageError("verify_dense_avoiding: empty coefficient list");
  const std::uint64_t n = lambda.size();
  if (n != context.n) throw UsageError("verify_dense_avoiding: context prepared for another level");
  if (n > basis.elements.size()) throw UsageError("verify_dense_avoiding: not enough basis elements");
  if (lambda.back().is_zero()) {
    throw UsageError("verify_dense_avoiding: the last coefficient must be nonzero");
  }

  DenseAvoidingVerification out;
  out.arc = context.arc;
  out.n = n;
  out.threshold = threshold;

  for (std::uint64_t k = 1; k < n; ++k) {
    ContributionTrace ct;
    ct.k = k;
    const double scale = std::pow(std::abs(lambda[k - 1].to_complex()), basis.q);
    ct.trace = context.unit_traces[k - 1];
    for (RadialSample& s : ct.trace) {
      s.value *= scale;
      s.error *= scale;
    }
    ct.stabilized = trace_stabilized(ct.trace);
    out.all_lower_stabilized &= ct.stabilized;
    for (const RadialSample& s : ct.trace) out.any_flagged |= s.flagged;
    out.lower_terms.push_back(std::move(ct));
  }

  HardyFn combo;
  for (std::uint64_t k = 1; k <= n; ++k) {
    combo = combo + basis.elements[k - 1].element.scaled(lambda[k - 1]);
  }
  out.combination_trace = sweep(combo, context.arc, basis.q, context.schedule, tol);
  for (const RadialSample& s : out.combination_trace) {
    out.any_flagged |= s.flagged;
    if (!out.crossing_t && s.value > threshold) out.crossing_t = s.t;
  }
  out.crossed = out.crossing_t.has_value();
  std::ostringstream os;
  if (out.crossed) {
    os << "localized q-integral exceeds " << threshold << " at t = " << *out.crossing_t
       << "; the full-circle integral dominates the arc integral, so sup_r int |L|^q = +inf "
          "is witnessed at desk scale";
  } else {
    os << "localized q-integral did not exceed " << threshold << " within the schedule";
  }
  out.conclusion = os.str();
  return out;
}

DenseAvoidingVerification verify_dense_avoiding(std::span<const RationalComplex> lambda,
                                                const DenseAvoidingBasis& basis,
                                                const RadialSchedule& schedule, double threshold,
                                                double tol) {
  const DenseAvoidingContext ctx = prepare_dense_avoiding(basis, lambda.size(), schedule, tol);
  return verify_dense_avoiding(lambda, basis, ctx, threshold, tol);
}

double dyadic_fraction(std::uint64_t k) {
  if (k == 0) throw UsageError("dyadic_fraction: index must be >= 1");
  std::uint64_t level = 1, first = 1, count = 1;
  while (k > count) {
    k -= count;
    ++level;
    count = std::uint64_t{1} << (level - 1);
    first = 1;
  }
  const std::uint64_t odd = first + 2 * (k - 1);
  return static_cast<double>(odd) / std::pow(2.0, static_cast<double>(level));
}

TheoremAWitness theoremA_witness(double p, std::uint64_t K, std::function<double(int)> q_schedule,
                                 const TheoremAProbeConfig& config) {
  if (!(p > 0.0)) throw UsageError("theoremA_witness: p must be > 0");
  if (K < 1) throw UsageError("theoremA_witness: K must be >= 1");
  if (!q_schedule) {
    q_schedule = [p](int m) { return p * static_cast<double>(m) / (static_cast<double>(m) + 1.0); };
  }

  TheoremAWitness w;
  w.p = p;
  w.gamma = 1.0 / p;

  // Size of a unit singular term in the d_{q_m} metric, by boundary
  // quadrature (rotation invariant, one integral per schedule entry).
  std::vector<double> unit_size(K + 1, 0.0);
  const HardyFn unit = HardyFn::singular(Complex{1.0, 0.0}, 0.0, w.gamma);
  for (std::uint64_t m = 1; m <= K; ++m) {
    const double qm = q_schedule(static_cast<int>(m));
    if (!(qm > 0.0 && qm < p)) throw UsageError("theoremA_witness: schedule must satisfy 0 < q_m < p");
    const QuadratureResult res = boundary_integral(unit, Arc::full_circle(), qm, config.tol);
    if (res.flagged) throw UndeterminedError("theoremA_witness: base integral failed to converge");
    unit_size[m] = res.hi();
  }

  std::vector<SingularTerm> terms;
  for (std::uint64_t k = 1; k <= K; ++k) {
    const double omega = kTwoPi * dyadic_fraction(k);
    w.omegas.push_back(omega);
    const auto size_at = [&](double eps, std::uint64_t m) {
      const double qm = q_schedule(static_cast<int>(m));
      return qm >= 1.0 ? eps * std::pow(unit_size[m], 1.0 / qm)
                       : std::pow(eps, qm) * unit_size[m];
    };
    int t = 0;
    const auto admissible = [&](int tt) {
      const double eps = std::pow(2.0, -tt);
      for (std::uint64_t m = 1; m <= k; ++m) {
        if (!(size_at(eps, m) < std::pow(2.0, -static_cast<double>(k)))) return false;
      }
      return true;
    };
    while (t <= 2048 && !admissible(t)) ++t;
    if (t > 2048) throw UndeterminedError("theoremA_witness: epsilon search failed");
    const double eps = std::pow(2.0, -t);
    w.epsilons.push_back(eps);
    terms.push_back(SingularTerm{Complex{eps, 0.0}, omega, w.gamma});
  }
  w.fn = HardyFn(std::move(terms), {});

  // Clause 1: bounded full-circle q-integrals for q < p, stable under
  // panel refinement.
  std::vector<double> below = config.below_q;
  if (below.empty()) below = {p / 2.0};
  for (double q : below) {
    TheoremAClause1 c1;
    c1.q = q;
    QuadratureOptions opts;
    opts.global_refine = true;
    const QuadratureResult res = boundary_integral(w.fn, Arc::full_circle(), q, config.tol, opts);
    c1.boundary_value = res.value;
    c1.refined_delta = res.refined_value ? std::abs(*res.refined_value - res.value) : kInf;
    c1.stable = c1.refined_delta <= config.refine_stability && !res.flagged;
    c1.trace = sweep(w.fn, Arc::full_circle(), q, config.schedule, config.tol);
    w.clause1.push_back(std::move(c1));
  }

  // Clause 2: localized delta-integrals around each included direction.
  std::vector<double> above = config.at_or_above;
  if (above.empty()) above = {p};
  std::vector<double> thresholds = config.thresholds;
  if (thresholds.empty()) thresholds = {10.0, 100.0};
  for (std::size_t k = 0; k < w.omegas.size(); ++k) {
    double gap = kTwoPi;
    for (std::size_t j = 0; j < w.omegas.size(); ++j) {
      if (j != k) gap = std::min(gap, angular_gap(w.omegas[k], w.omegas[j]));
    }
    const double half = gap / 2.0;
    const Arc arc = make_arc(w.omegas[k] - half, w.omegas[k] + half);
    for (double delta : above) {
      TheoremAClause2 c2;
      c2.term = k;
      c2.delta_exponent = delta;
      c2.growth = localized_growth(w.fn, arc, delta, config.schedule, thresholds, config.tol);
      w.clause2.push_back(std::move(c2));
    }
  }
  return w;
}

}  // namespace genlab
