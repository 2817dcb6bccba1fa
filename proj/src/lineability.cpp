#include "genlab/lineability.hpp"

#include <cmath>
#include <sstream>

#include "genlab/blocks.hpp"

namespace genlab {

NeighborhoodSpec NeighborhoodSpec::at_level(const CapAboveSpace& cap, int j) {
  if (j < 1) throw UsageError("neighborhood level must be >= 1");
  NeighborhoodSpec v;
  v.level = j;
  v.radius = 1.0 / static_cast<double>(j);
  v.exponents.reserve(j);
  for (int k = 1; k <= j; ++k) v.exponents.push_back(cap.exponent(k));
  return v;
}

std::optional<ScaleChoice> scale_into(const ComplexSeq& y, const NeighborhoodSpec& V) {
  const SeqProfile profile = build_profile(y);
  if (profile.atoms.size() != 1 || profile.block_part || profile.finite_prefix != 0) {
    throw UsageError("scale_into: input must carry a single power-law certificate");
  }
  const PowerAtom& atom = profile.atoms.front();
  const double b = 1.0 / atom.gamma;
  const double y_abs = std::abs(atom.coeff);
  for (double pk : V.exponents) {
    if (!(pk > b)) throw UsageError("scale_into: every neighborhood exponent must exceed b");
  }

  // Certified p-sum of y at exponent p: |coeff|^p * (1 + b/(p-b)).
  const auto psum_bound = [&](double p) {
    return widen_up(std::pow(y_abs, p) * (1.0 + b / (p - b)));
  };

  for (int t = 0; t <= kScaleSearchCap; ++t) {
    const double c = std::pow(2.0, -t);
    std::vector<double> bounds;
    bounds.reserve(V.exponents.size());
    bool ok = true;
    for (double pk : V.exponents) {
      const double dist_bound = pk >= 1.0 ? c * std::pow(psum_bound(pk), 1.0 / pk)
                                          : std::pow(c, pk) * psum_bound(pk);
      bounds.push_back(dist_bound);
      if (!(dist_bound < V.radius)) {
        ok = false;
        break;
      }
    }
    if (ok) return ScaleChoice{c, t, std::move(bounds)};
  }
  return std::nullopt;
}

namespace {

/// f_j as a certified sequence: x_j plus c_j * y_j with the block positions
/// at indices <= n_j removed.  The removed prefix is finitely supported, so
/// the combination certificate stays fully analytic.
ComplexSeq assemble_element(const ComplexSeq& x, Index n_j, const ComplexSeq& y, double c,
                            BlockId j, double gamma) {
  std::vector<Complex> removed(static_cast<std::size_t>(n_j), Complex{0.0, 0.0});
  for (Index n = 1; n <= n_j; ++n) {
    const auto [jj, k] = block_of(n);
    if (jj == j) removed[n - 1] = Complex{std::pow(static_cast<double>(k), -gamma), 0.0};
  }
  const ComplexSeq prefix = ComplexSeq::finite_support(std::move(removed));
  const Complex coeffs[3] = {Complex{1.0, 0.0}, Complex{c, 0.0}, Complex{-c, 0.0}};
  const ComplexSeq seqs[3] = {x, y, prefix};
  return linear_combine(coeffs, seqs);
}

}  // namespace

LineableBasis lineable_basis(double b, std::uint64_t count) {
  if (!(b > 0.0)) throw UsageError("lineable_basis: b must be > 0");
  if (count < 1) throw UsageError("lineable_basis: count must be >= 1");

  LineableBasis basis;
  basis.b = b;
  basis.ambient = CapAboveSpace{b, nullptr, false};
  basis.elements.reserve(count);
  const double gamma = 1.0 / b;

  for (std::uint64_t j = 1; j <= count; ++j) {
    LineableElement el;
    el.j = j;
    el.x_exact = enumerate_rational(j);
    el.x = ComplexSeq::finite_support_exact(el.x_exact.entries);
    el.support_bound = el.x_exact.support_bound();

    const ComplexSeq y = divergent_block_seq(b, j);
    const auto V = NeighborhoodSpec::at_level(basis.ambient, static_cast<int>(j));
    const auto choice = scale_into(y, V);
    if (!choice) {
      throw UndeterminedError("lineable_basis: no admissible scaling below 2^-" +
                              std::to_string(kScaleSearchCap) + " at level " + std::to_string(j));
    }
    el.c = choice->c;
    el.c_exponent = choice->t;
    el.f = assemble_element(el.x, el.support_bound, y, el.c, j, gamma);
    basis.elements.push_back(std::move(el));
  }
  return basis;
}

ComboEscape verify_lineable_combo(std::span<const Complex> coeffs, const LineableBasis& basis,
                                  double M) {
  if (coeffs.empty()) throw UsageError("verify_lineable_combo: empty coefficient list");
  if (coeffs.size() > basis.elements.size()) {
    throw UsageError("verify_lineable_combo: more coefficients than basis elements");
  }
  const std::size_t N = coeffs.size();
  const Complex a_last = coeffs[N - 1];
  if (a_last == Complex{0.0, 0.0}) {
    throw UsageError("verify_lineable_combo: the last coefficient must be nonzero");
  }
  if (!(M > 0.0)) throw UsageError("verify_lineable_combo: threshold must be > 0");

  Index common_bound = 0;
  for (std::size_t i = 0; i < N; ++i) {
    common_bound = std::max(common_bound, basis.elements[i].support_bound);
  }
  const auto& last = basis.elements[N - 1];
  // Beyond the common support bound every other element vanishes on A_N, so
  // the combination equals a_N * c_N * y_N there exactly.
  PartialSumDivergence div;
  div.exponent = basis.b;
  div.block = last.j;
  div.form = GrowthForm::kHarmonicLog;
  div.scale = std::pow(std::abs(a_last) * last.c, basis.b);
  div.skip = IndexFamily::positions_at_or_below(last.j, common_bound);

  ComboEscape out;
  out.point = div.escape(M);
  out.threshold = M;
  out.scale = div.scale;
  out.skipped = div.skip;
  std::ostringstream os;
  os << "on block " << last.j << " beyond index " << common_bound
     << " the combination is exactly a_N c_N y_N; b-sum over positions (" << div.skip << ", K] >= "
     << div.scale << " * (ln(K+1) - ln(" << div.skip + 1 << "))";
  out.derivation = os.str();
  return out;
}

}  // namespace genlab
