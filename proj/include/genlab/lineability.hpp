#ifndef GENLAB_LINEABILITY_HPP_
#define GENLAB_LINEABILITY_HPP_

#include <optional>

#include "genlab/enumeration.hpp"
#include "genlab/membership.hpp"
#include "genlab/metrics.hpp"
#include "genlab/witnesses.hpp"

namespace genlab {

/// The j-th basic neighborhood of 0 in cap(b): membership is
/// d_{p_k}(g, 0) < 1/j for k = 1..j, with the norm metric for p_k >= 1 and
/// the p-sum metric for p_k < 1.
struct NeighborhoodSpec {
  int level = 1;                   // j
  std::vector<double> exponents;   // p_1 > ... > p_j from the cap schedule
  double radius = 1.0;             // 1/j

  static NeighborhoodSpec at_level(const CapAboveSpace& cap, int j);
};

struct ScaleChoice {
  double c = 1.0;   // 2^(-t)
  int t = 0;
  std::vector<double> certified_bounds;  // certified d_{p_k}(c*y, 0) for each k
};

inline constexpr int kScaleSearchCap = 2048;

/// Largest power of two c = 2^(-t), t >= 0, such that the closed-form bounds
/// certify d_{p_k}(c*y, 0) < radius for every exponent of V.  The input must
/// carry a (possibly scaled) single power-law certificate with gamma = 1/b and
/// every exponent above b.  Returns nullopt if no t <= kScaleSearchCap works.
std::optional<ScaleChoice> scale_into(const ComplexSeq& y, const NeighborhoodSpec& V);

/// One element of the dense lineable basis for (cap(b), lp(b)).
struct LineableElement {
  std::uint64_t j = 1;
  RationalSeq x_exact;      // the j-th enumerated finite-support sequence
  ComplexSeq x;             // same as a ComplexSeq
  Index support_bound = 0;  // n_j
  double c = 1.0;           // scaling of the divergent block part
  int c_exponent = 0;       // c = 2^(-c_exponent)
  ComplexSeq f;             // the assembled basis element
};

struct LineableBasis {
  double b = 1.0;
  CapAboveSpace ambient;  // cap(b) with the schedule used for neighborhoods
  std::vector<LineableElement> elements;
};

/// Builds the basis f_j, j = 1..count: f_j agrees with x_j up to its support
/// bound n_j, equals c_j * y_j on block A_j beyond n_j, and vanishes
/// elsewhere; c_j is chosen by scale_into so that d_{p_k}(f_j - x_j, 0) < 1/j
/// is certified for k = 1..j.
LineableBasis lineable_basis(double b, std::uint64_t count);

/// Certified escape record for a nonzero combination sum a_i f_i (a_N != 0):
/// the b-sum of the combination over block A_N beyond max(n_1..n_N) exceeds
/// the threshold at the certified position.
struct ComboEscape {
  EscapePoint point;
  double threshold = 0.0;
  double scale = 0.0;          // |a_N c_N|^b
  std::uint64_t skipped = 0;   // block positions below the common support bound
  std::string derivation;
};

ComboEscape verify_lineable_combo(std::span<const Complex> coeffs, const LineableBasis& basis,
                                  double M);

}  // namespace genlab

#endif  // GENLAB_LINEABILITY_HPP_
