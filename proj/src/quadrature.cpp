#include "genlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace genlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// 15-point Gauss-Kronrod pair (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

/// One integration panel.  Modes:
///   0: absolute angle over [x0, x1]
///   1: local offset delta over [x0, x1] around the anchored term
///   2: substituted boundary coordinate u over [x0, x1] within [0, 1]:
///      theta = omega + side * h * u^beta, weight beta*h*u^(beta-1)
struct Panel {
  double x0 = 0.0, x1 = 0.0;
  int mode = 0;
  int anchor = -1;
  double h = 0.0;
  double beta = 1.0;
  double side = 1.0;
  double value = 0.0;
  double error = 0.0;
};

struct Integrand {
  const HardyFn* f;
  double r;
  double q;
  PhaseConvention conv;

  double operator()(const Panel& p, double x) const {
    double mag;
    switch (p.mode) {
      case 0:
        mag = std::abs(f->eval_polar(r, x, -1, 0.0, conv));
        return std::pow(mag, q);
      case 1:
        mag = std::abs(f->eval_polar(r, 0.0, p.anchor, x, conv));
        return std::pow(mag, q);
      default: {
        const double u = x;
        const double offset = p.side * p.h * std::pow(u, p.beta);
        mag = std::abs(f->eval_polar(r, 0.0, p.anchor, offset, conv));
        const double jac = p.beta * p.h * std::pow(u, p.beta - 1.0);
        return std::pow(mag, q) * jac;
      }
    }
  }
};

void evaluate_panel(const Integrand& g, Panel& p) {
  const double c = 0.5 * (p.x0 + p.x1);
  const double half = 0.5 * (p.x1 - p.x0);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = g(p, c - half * kXgk[i]);
    fv[14 - i] = g(p, c + half * kXgk[i]);
  }
  fv[7] = g(p, c);
  double k15 = kWgk[7] * fv[7];
  for (int i = 0; i < 7; ++i) k15 += kWgk[i] * (fv[i] + fv[14 - i]);
  double g7 = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i) g7 += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  p.value = k15 * half;
  p.error = std::abs((k15 - g7) * half);
  if (!std::isfinite(p.value)) {
    p.value = 0.0;
    p.error = kInf;
  }
}

struct Workspace {
  std::vector<Panel> panels;
  Integrand g;

  void seed(Panel p) {
    evaluate_panel(g, p);
    panels.push_back(p);
  }
};

QuadratureResult run_adaptive(Workspace& ws, double tol, const QuadratureOptions& opts) {
  QuadratureResult out;
  auto total = [&ws] {
    KahanSum v, e;
    for (const Panel& p : ws.panels) {
      v.add(p.value);
      e.add(p.error);
    }
    return std::pair{v.value(), e.value()};
  };

  // max-heap of (error at push time, panel id); stale entries are skipped
  std::priority_queue<std::pair<double, std::size_t>> heap;
  for (std::size_t i = 0; i < ws.panels.size(); ++i) heap.emplace(ws.panels[i].error, i);

  auto [value, err] = total();
  out.refinement_trace.emplace_back(static_cast<int>(ws.panels.size()), value);
  std::size_t next_snapshot = ws.panels.size() * 2;

  const auto target = [tol](double v) { return tol * std::max(1.0, std::abs(v)); };
  while (err > target(value) && !heap.empty() &&
         ws.panels.size() < static_cast<std::size_t>(opts.panel_budget)) {
    const auto [prio, worst] = heap.top();
    heap.pop();
    if (prio != ws.panels[worst].error) continue;  // stale entry
    Panel& p = ws.panels[worst];
    const double mid = 0.5 * (p.x0 + p.x1);
    if (!(mid > p.x0 && mid < p.x1)) continue;  // cannot split at this precision
    Panel right = p;
    p.x1 = mid;
    right.x0 = mid;
    const double old_v = p.value, old_e = p.error;
    evaluate_panel(ws.g, p);
    evaluate_panel(ws.g, right);
    ws.panels.push_back(right);
    heap.emplace(ws.panels[worst].error, worst);
    heap.emplace(right.error, ws.panels.size() - 1);
    value += ws.panels[worst].value + right.value - old_v;
    err += ws.panels[worst].error + right.error - old_e;
    if (ws.panels.size() >= next_snapshot) {
      const auto [v2, e2] = total();
      value = v2;
      err = e2;
      out.refinement_trace.emplace_back(static_cast<int>(ws.panels.size()), value);
      next_snapshot *= 2;
    }
  }

  const auto [v_final, e_final] = total();
  out.value = v_final;
  out.error_estimate = e_final;
  out.panels = static_cast<int>(ws.panels.size());
  out.refinement_trace.emplace_back(out.panels, out.value);
  if (e_final > target(v_final)) {
    out.flagged = true;
    out.flag_reason = "panel budget exhausted before the tolerance was met";
  }

  if (opts.global_refine) {
    KahanSum refined;
    for (const Panel& p : ws.panels) {
      Panel l = p, r2 = p;
      const double mid = 0.5 * (p.x0 + p.x1);
      if (!(mid > p.x0 && mid < p.x1)) {
        refined.add(p.value);
        continue;
      }
      l.x1 = mid;
      r2.x0 = mid;
      evaluate_panel(ws.g, l);
      evaluate_panel(ws.g, r2);
      refined.add(l.value);
      refined.add(r2.value);
    }
    out.refined_value = refined.value();
  }
  return out;
}

struct Region {
  double a = 0.0;
  double b = 0.0;
  std::vector<std::pair<double, std::size_t>> sings;  // absolute positions in [a, b]
};

/// Rebase a full-circle integral so that no singularity sits near the seam:
/// start the interval at the midpoint of the widest circular gap.
Region make_region(const HardyFn& f, const Arc& arc) {
  Region reg;
  if (!arc.is_full()) {
    reg.a = arc.a;
    reg.b = arc.b;
    reg.sings = singular_directions_in(f, arc);
    return reg;
  }
  const auto dirs = singular_directions_in(f, Arc{0.0, kTwoPi});
  if (dirs.empty()) {
    reg.a = 0.0;
    reg.b = kTwoPi;
    return reg;
  }
  double best_gap = -1.0, start = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double cur = dirs[i].first;
    const double next = i + 1 < dirs.size() ? dirs[i + 1].first : dirs[0].first + kTwoPi;
    if (next - cur > best_gap) {
      best_gap = next - cur;
      start = 0.5 * (cur + next);
    }
  }
  reg.a = start;
  reg.b = start + kTwoPi;
  for (auto [w, idx] : dirs) {
    double pos = w < start ? w + kTwoPi : w;
    reg.sings.emplace_back(pos, idx);
  }
  std::sort(reg.sings.begin(), reg.sings.end());
  return reg;
}

void seed_middle(Workspace& ws, double a, double b) {
  if (!(b > a)) return;
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    Panel p;
    p.mode = 0;
    p.x0 = a + (b - a) * i / n;
    p.x1 = a + (b - a) * (i + 1) / n;
    ws.seed(p);
  }
}

/// Geometric ladder of mode-1 panels on one side of a singularity, from the
/// window edge down to `core`.
void seed_window_side(Workspace& ws, int anchor, double h, double core, double sign) {
  std::vector<double> rungs;
  double w = h;
  while (w > core) {
    rungs.push_back(w);
    w *= 0.5;
  }
  rungs.push_back(w);
  for (std::size_t i = 0; i + 1 < rungs.size(); ++i) {
    Panel p;
    p.mode = 1;
    p.anchor = anchor;
    p.x0 = sign > 0 ? rungs[i + 1] : -rungs[i];
    p.x1 = sign > 0 ? rungs[i] : -rungs[i + 1];
    ws.seed(p);
  }
  Panel cp;
  cp.mode = 1;
  cp.anchor = anchor;
  cp.x0 = sign > 0 ? 0.0 : -rungs.back();
  cp.x1 = sign > 0 ? rungs.back() : 0.0;
  ws.seed(cp);
}

}  // namespace

QuadratureResult circle_integral(const HardyFn& f, double r, const Arc& arc, double q, double tol,
                                 const QuadratureOptions& opts) {
  if (!(r > 0.0 && r < 1.0)) throw UsageError("circle_integral: radius must satisfy 0 < r < 1");
  if (!(q > 0.0)) throw UsageError("circle_integral: exponent must be > 0");
  if (!(tol > 0.0)) throw UsageError("circle_integral: tolerance must be > 0");

  const Region reg = make_region(f, arc);
  Workspace ws{{}, Integrand{&f, r, q, opts.convention}};

  const double core = std::max((1.0 - r) / 8.0, 1e-300);
  double cursor = reg.a;
  for (const auto& [pos, idx] : reg.sings) {
    double right_limit = reg.b;
    for (const auto& [pos2, idx2] : reg.sings) {
      if (pos2 > pos) {
        right_limit = pos2;
        break;
      }
    }
    const double h_left = std::min(pos - cursor, 0.5);
    const double h_right = std::min((right_limit - pos) * (right_limit == reg.b ? 1.0 : 0.5), 0.5);
    if (pos > cursor && h_left > 0.0) {
      seed_middle(ws, cursor, pos - h_left);
      seed_window_side(ws, static_cast<int>(idx), h_left, core, -1.0);
    }
    if (h_right > 0.0) {
      seed_window_side(ws, static_cast<int>(idx), h_right, core, +1.0);
    }
    cursor = pos + h_right;
  }
  seed_middle(ws, cursor, reg.b);
  if (ws.panels.empty()) seed_middle(ws, reg.a, reg.b);

  return run_adaptive(ws, tol, opts);
}

QuadratureResult boundary_integral(const HardyFn& f, const Arc& arc, double q, double tol,
                                   const QuadratureOptions& opts) {
  if (!(q > 0.0)) throw UsageError("boundary_integral: exponent must be > 0");
  if (!(tol > 0.0)) throw UsageError("boundary_integral: tolerance must be > 0");
  const Region reg = make_region(f, arc);
  for (const auto& [pos, idx] : reg.sings) {
    if (f.terms()[idx].gamma * q >= 1.0) {
      throw UsageError("boundary_integral: divergent singularity inside the arc (gamma*q >= 1)");
    }
  }

  Workspace ws{{}, Integrand{&f, 1.0, q, opts.convention}};
  double cursor = reg.a;
  for (const auto& [pos, idx] : reg.sings) {
    double right_limit = reg.b;
    for (const auto& [pos2, idx2] : reg.sings) {
      if (pos2 > pos) {
        right_limit = pos2;
        break;
      }
    }
    const double h_left = std::min(pos - cursor, 0.5);
    const double h_right = std::min((right_limit - pos) * (right_limit == reg.b ? 1.0 : 0.5), 0.5);
    const double gq = f.terms()[idx].gamma * q;
    const double beta = std::clamp(std::ceil(2.0 / (1.0 - gq)), 2.0, 96.0);
    if (pos > cursor && h_left > 0.0) {
      seed_middle(ws, cursor, pos - h_left);
      Panel p;
      p.mode = 2;
      p.anchor = static_cast<int>(idx);
      p.h = h_left;
      p.beta = beta;
      p.side = -1.0;
      p.x0 = 0.0;
      p.x1 = 1.0;
      ws.seed(p);
    }
    if (h_right > 0.0) {
      Panel p;
      p.mode = 2;
      p.anchor = static_cast<int>(idx);
      p.h = h_right;
      p.beta = beta;
      p.side = +1.0;
      p.x0 = 0.0;
      p.x1 = 1.0;
      ws.seed(p);
    }
    cursor = pos + h_right;
  }
  seed_middle(ws, cursor, reg.b);
  if (ws.panels.empty()) seed_middle(ws, reg.a, reg.b);

  return run_adaptive(ws, tol, opts);
}

}  // namespace genlab
