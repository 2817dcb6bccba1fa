#ifndef GENLAB_HARDY_HPP_
#define GENLAB_HARDY_HPP_

#include <vector>

#include "genlab/rational.hpp"

namespace genlab {

/// A singular boundary term c * (z - e^{i omega})^(-gamma).  Because the
/// paper-style power crosses the standard branch cut, evaluation uses the
/// principal power of w = 1 - e^{-i omega} z (strictly positive real part on
/// the disc) times a fixed phase:
///   term(z) = c * exp(-i gamma (omega + pi)) * w^(-gamma).
/// The alternate convention exp(-i gamma (omega - pi)) differs by a
/// unimodular per-term factor; |term| is identical under both.
struct SingularTerm {
  Complex c{1.0, 0.0};
  double omega = 0.0;  // canonicalized into [0, 2pi)
  double gamma = 1.0;  // > 0
};

enum class PhaseConvention : std::uint8_t { kPrincipal, kAlternate };

/// Closed circular arc [a, b] of boundary angles; b - a >= 2pi means the
/// full circle.
struct Arc {
  double a = 0.0;
  double b = 2.0 * 3.14159265358979323846;

  static Arc full_circle() { return Arc{0.0, 2.0 * 3.14159265358979323846}; }
  bool is_full() const { return b - a >= 2.0 * 3.14159265358979323846; }
  double length() const { return is_full() ? 2.0 * 3.14159265358979323846 : b - a; }
};

Arc make_arc(double a, double b);  // validates a < b

/// Radii r_t = 1 - 2^(-t) discretizing sup over 0 < r < 1.
struct RadialSchedule {
  int t_min = 1;
  int t_max = 14;

  std::vector<double> radii() const;
  static double radius(int t) { return 1.0 - std::pow(2.0, -static_cast<double>(t)); }
};

/// Finite sum of singular terms plus a polynomial with exact Q+iQ
/// coefficients.  Terms are canonicalized on construction: omegas are reduced
/// mod 2pi, terms with equal (omega, gamma) merge by summing coefficients,
/// zero-coefficient terms drop, and pairs sharing omega with different gamma
/// are kept and flagged.
class HardyFn {
 public:
  HardyFn() = default;
  HardyFn(std::vector<SingularTerm> terms, std::vector<RationalComplex> poly);

  const std::vector<SingularTerm>& terms() const { return terms_; }
  const std::vector<RationalComplex>& poly() const { return poly_; }
  bool coincident_omegas() const { return coincident_omegas_; }
  bool is_zero() const { return terms_.empty() && poly_.empty(); }

  /// Value at a point of the open disc (throws UsageError for |z| >= 1).
  Complex eval(Complex z, PhaseConvention conv = PhaseConvention::kPrincipal) const;

  /// Value at r e^{i theta} with r <= 1, evaluated stably near singular
  /// directions.  When anchor >= 0, theta is interpreted as
  /// terms()[anchor].omega + local_offset with the offset supplied exactly,
  /// which preserves full relative precision arbitrarily close to that
  /// singularity (quadrature uses this path).
  Complex eval_polar(double r, double theta, int anchor = -1, double local_offset = 0.0,
                     PhaseConvention conv = PhaseConvention::kPrincipal) const;

  HardyFn operator+(const HardyFn& other) const;
  HardyFn operator-(const HardyFn& other) const;
  /// Exact scaling (both the singular coefficients and the polynomial).
  HardyFn scaled(const RationalComplex& factor) const;

  static HardyFn singular(Complex c, double omega, double gamma);
  static HardyFn polynomial(std::vector<RationalComplex> coeffs);
  static HardyFn constant(const RationalComplex& c);

 private:
  std::vector<SingularTerm> terms_;
  std::vector<RationalComplex> poly_;
  bool coincident_omegas_ = false;
};

/// Angular positions inside the closed arc where f is singular (absolute
/// angles within [arc.a, arc.b], endpoints included; for the full circle one
/// representative per term).
std::vector<std::pair<double, std::size_t>> singular_directions_in(const HardyFn& f,
                                                                   const Arc& arc);

/// Shortest angular distance between two directions (mod 2pi).
double angular_gap(double x, double y);

}  // namespace genlab

#endif  // GENLAB_HARDY_HPP_
