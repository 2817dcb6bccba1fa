#include "genlab/hardy.hpp"

#include <algorithm>
#include <cmath>

namespace genlab {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double canonical_angle(double omega) {
  double w = std::fmod(omega, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

/// w^(-gamma) for w = 1 - r e^{i delta}, stable for delta and 1-r down to
/// denormal range: Re w = (1-r) + 2 r sin^2(delta/2) never cancels.
Complex inverse_power(double r, double delta, double gamma) {
  const double s = std::sin(0.5 * delta);
  const double re = (1.0 - r) + 2.0 * r * s * s;
  const double im = -r * std::sin(delta);
  const double mod = std::hypot(re, im);
  const double arg = std::atan2(im, re);
  return std::polar(std::exp(-gamma * std::log(mod)), -gamma * arg);
}

Complex phase_factor(double gamma, double omega, PhaseConvention conv) {
  const double shift = conv == PhaseConvention::kPrincipal ? omega + 3.14159265358979323846
                                                           : omega - 3.14159265358979323846;
  return std::polar(1.0, -gamma * shift);
}

}  // namespace

Arc make_arc(double a, double b) {
  if (!(a < b)) throw UsageError("arc requires a < b");
  return Arc{a, b};
}

std::vector<double> RadialSchedule::radii() const {
  if (t_min < 1 || t_max < t_min) throw UsageError("radial schedule requires 1 <= t_min <= t_max");
  std::vector<double> out;
  out.reserve(t_max - t_min + 1);
  for (int t = t_min; t <= t_max; ++t) out.push_back(radius(t));
  return out;
}

HardyFn::HardyFn(std::vector<SingularTerm> terms, std::vector<RationalComplex> poly)
    : poly_(std::move(poly)) {
  for (SingularTerm& t : terms) {
    if (!(t.gamma > 0.0)) throw UsageError("singular term requires gamma > 0");
    t.omega = canonical_angle(t.omega);
  }
  std::sort(terms.begin(), terms.end(), [](const SingularTerm& x, const SingularTerm& y) {
    return std::tie(x.omega, x.gamma) < std::tie(y.omega, y.gamma);
  });
  for (const SingularTerm& t : terms) {
    if (!terms_.empty() && terms_.back().omega == t.omega && terms_.back().gamma == t.gamma) {
      terms_.back().c += t.c;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const SingularTerm& t) { return t.c == Complex{0.0, 0.0}; });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].omega == terms_[i - 1].omega) coincident_omegas_ = true;
  }
  while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
}

Complex HardyFn::eval(Complex z, PhaseConvention conv) const {
  if (!(std::abs(z) < 1.0)) throw UsageError("eval: the point must lie in the open unit disc");
  Complex acc{0.0, 0.0};
  for (const SingularTerm& t : terms_) {
    const Complex w = Complex{1.0, 0.0} - std::polar(1.0, -t.omega) * z;
    acc += t.c * phase_factor(t.gamma, t.omega, conv) * std::pow(w, Complex{-t.gamma, 0.0});
  }
  if (!poly_.empty()) {
    Complex p{0.0, 0.0};
    for (std::size_t i = poly_.size(); i-- > 0;) p = p * z + poly_[i].to_complex();
    acc += p;
  }
  return acc;
}

Complex HardyFn::eval_polar(double r, double theta, int anchor, double local_offset,
                            PhaseConvention conv) const {
  if (!(r >= 0.0 && r <= 1.0)) throw UsageError("eval_polar: radius must lie in [0, 1]");
  const double base = anchor >= 0 ? terms_[static_cast<std::size_t>(anchor)].omega : theta;
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const SingularTerm& t = terms_[i];
    double delta;
    if (anchor >= 0) {
      delta = (base - t.omega) + local_offset;  // exact for the anchored term
    } else {
      delta = theta - t.omega;
    }
    acc += t.c * phase_factor(t.gamma, t.omega, conv) * inverse_power(r, delta, t.gamma);
  }
  if (!poly_.empty()) {
    const double ang = anchor >= 0 ? base + local_offset : theta;
    const Complex z = std::polar(r, ang);
    Complex p{0.0, 0.0};
    for (std::size_t i = poly_.size(); i-- > 0;) p = p * z + poly_[i].to_complex();
    acc += p;
  }
  return acc;
}

HardyFn HardyFn::operator+(const HardyFn& other) const {
  std::vector<SingularTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  std::vector<RationalComplex> poly = poly_;
  if (poly.size() < other.poly_.size()) poly.resize(other.poly_.size());
  for (std::size_t i = 0; i < other.poly_.size(); ++i) poly[i] = poly[i] + other.poly_[i];
  return HardyFn(std::move(terms), std::move(poly));
}

HardyFn HardyFn::operator-(const HardyFn& other) const {
  std::vector<SingularTerm> terms = terms_;
  for (SingularTerm t : other.terms_) {
    t.c = -t.c;
    terms.push_back(t);
  }
  std::vector<RationalComplex> poly = poly_;
  if (poly.size() < other.poly_.size()) poly.resize(other.poly_.size());
  for (std::size_t i = 0; i < other.poly_.size(); ++i) poly[i] = poly[i] - other.poly_[i];
  return HardyFn(std::move(terms), std::move(poly));
}

HardyFn HardyFn::scaled(const RationalComplex& factor) const {
  std::vector<SingularTerm> terms = terms_;
  const Complex fc = factor.to_complex();
  for (SingularTerm& t : terms) t.c *= fc;
  std::vector<RationalComplex> poly = poly_;
  for (RationalComplex& c : poly) c = c * factor;
  return HardyFn(std::move(terms), std::move(poly));
}

HardyFn HardyFn::singular(Complex c, double omega, double gamma) {
  return HardyFn({SingularTerm{c, omega, gamma}}, {});
}

HardyFn HardyFn::polynomial(std::vector<RationalComplex> coeffs) {
  return HardyFn({}, std::move(coeffs));
}

HardyFn HardyFn::constant(const RationalComplex& c) { return HardyFn({}, {c}); }

double angular_gap(double x, double y) {
  double d = std::fmod(std::abs(x - y), kTwoPi);
  if (d > 3.14159265358979323846) d = kTwoPi - d;
  return d;
}

std::vector<std::pair<double, std::size_t>> singular_directions_in(const HardyFn& f,
                                                                   const Arc& arc) {
  std::vector<std::pair<double, std::size_t>> out;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const double w = f.terms()[i].omega;
    if (arc.is_full()) {
      double pos = arc.a + std::fmod(w - arc.a, kTwoPi);
      if (pos < arc.a) pos += kTwoPi;
      out.emplace_back(pos, i);
      continue;
    }
    const double k_lo = std::ceil((arc.a - w) / kTwoPi);
    const double k_hi = std::floor((arc.b - w) / kTwoPi);
    for (double k = k_lo; k <= k_hi; ++k) {
      out.emplace_back(w + k * kTwoPi, i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace genlab
