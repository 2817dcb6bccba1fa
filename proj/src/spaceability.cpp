#include "genlab/spaceability.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "genlab/blocks.hpp"

namespace genlab {

BlockConstants BlockConstants::from_list(std::vector<Complex> vals) {
  BlockConstants out;
  double sup = 0.0;
  std::optional<BlockId> first;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    sup = std::max(sup, std::abs(vals[i]));
    if (!first && vals[i] != Complex{0.0, 0.0}) first = static_cast<BlockId>(i + 1);
  }
  auto data = std::make_shared<std::vector<Complex>>(std::move(vals));
  out.value = [data](BlockId m) {
    return m <= data->size() ? (*data)[m - 1] : Complex{0.0, 0.0};
  };
  out.sup_abs = sup;
  out.first_nonzero = first;
  return out;
}

BlockConstants BlockConstants::uniform(Complex c) {
  BlockConstants out;
  out.value = [c](BlockId) { return c; };
  out.sup_abs = std::abs(c);
  out.first_nonzero = c == Complex{0.0, 0.0} ? std::nullopt : std::optional<BlockId>{1};
  return out;
}

ComplexSeq block_constant_embed(const BlockConstants& constants) {
  if (!constants.value) throw UsageError("block_constant_embed: missing rule");
  if (!std::isfinite(constants.sup_abs)) {
    throw UsageError("block_constant_embed: sup over blocks must be finite");
  }
  BlockConstantCert cert;
  cert.constants = constants.value;
  cert.sup_abs = constants.sup_abs;
  cert.first_nonzero = constants.first_nonzero;
  return ComplexSeq::block_constant(std::move(cert));
}

namespace {

void check_ambient_above_lp(const SpaceSpec& ambient, double b) {
  if (const auto* lp = std::get_if<LpSpace>(&ambient)) {
    if (!(lp->p > b)) {
      throw UsageError("spaceable_basis: ambient lp(" + std::to_string(lp->p) +
                       ") does not strictly contain lp(" + std::to_string(b) + ")");
    }
    return;
  }
  if (const auto* cap = std::get_if<CapAboveSpace>(&ambient)) {
    if (!(cap->a >= b)) {
      throw UsageError("spaceable_basis: cap(" + std::to_string(cap->a) +
                       ") does not contain lp(" + std::to_string(b) + ")");
    }
    return;
  }
  // c0 and linf always contain every lp strictly.
}

}  // namespace

SpaceableBasis spaceable_basis(const SpaceSpec& ambient, double b, std::uint64_t count) {
  if (!(b > 0.0)) throw UsageError("spaceable_basis: b must be > 0");
  if (count < 1) throw UsageError("spaceable_basis: count must be >= 1");
  check_ambient_above_lp(ambient, b);

  SpaceableBasis basis;
  basis.ambient = ambient;
  basis.target = b;
  const SpaceSpec target_space = lp_space(b);
  for (BlockId j = 1; j <= count; ++j) {
    ComplexSeq y = divergent_block_seq(b, j);
    Verdict in = membership(y, ambient);
    Verdict out = membership(y, target_space);
    if (!is_certified_in(in) || !is_certified_out(out)) {
      throw std::logic_error("spaceable_basis: block sequence failed to certify");
    }
    basis.elements.push_back(std::move(y));
    basis.verdicts_in.push_back(std::move(in));
    basis.verdicts_out.push_back(std::move(out));
  }
  return basis;
}

SpaceableBasis block_indicator_basis(std::uint64_t count) {
  if (count < 1) throw UsageError("block_indicator_basis: count must be >= 1");
  SpaceableBasis basis;
  basis.ambient = linf_space();
  basis.target = C0Target{};
  for (BlockId j = 1; j <= count; ++j) {
    std::vector<Complex> vals(j, Complex{0.0, 0.0});
    vals[j - 1] = Complex{1.0, 0.0};
    ComplexSeq u = block_constant_embed(BlockConstants::from_list(std::move(vals)));
    Verdict in = membership(u, basis.ambient);
    Verdict out = membership(u, c0_space());
    if (!is_certified_in(in) || !is_certified_out(out)) {
      throw std::logic_error("block_indicator_basis: indicator failed to certify");
    }
    basis.elements.push_back(std::move(u));
    basis.verdicts_in.push_back(std::move(in));
    basis.verdicts_out.push_back(std::move(out));
  }
  return basis;
}

SpaceableBasis spaceable_for_pair(const SpaceSpec& ambient, const SpaceSpec& avoided,
                                  std::uint64_t count) {
  if (std::holds_alternative<C0Space>(avoided)) {
    if (!std::holds_alternative<LInfSpace>(ambient)) {
      throw UsageError("spaceable_for_pair: only linf sits strictly above c0 in the chain");
    }
    return block_indicator_basis(count);
  }
  if (const auto* lp = std::get_if<LpSpace>(&avoided)) {
    return spaceable_basis(ambient, lp->p, count);
  }
  if (const auto* cap = std::get_if<CapAboveSpace>(&avoided)) {
    // Pick b in (a, .) with lp(b) between the avoided space and the ambient:
    // the basis avoiding lp(b) also avoids cap(a) by inclusion.
    double b;
    if (const auto* lpy = std::get_if<LpSpace>(&ambient)) {
      if (!(cap->a < lpy->p)) throw UsageError("spaceable_for_pair: ambient does not exceed cap(a)");
      b = 0.5 * (cap->a + lpy->p);
    } else if (const auto* capy = std::get_if<CapAboveSpace>(&ambient)) {
      if (!(cap->a < capy->a)) throw UsageError("spaceable_for_pair: ambient does not exceed cap(a)");
      b = capy->a;
    } else {
      b = cap->a + 1.0;
    }
    SpaceableBasis basis = spaceable_basis(ambient, b, count);
    // Tighten the recorded out-verdicts to the avoided space itself.
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      Verdict out = membership(basis.elements[i], avoided);
      if (!is_certified_out(out)) {
        throw std::logic_error("spaceable_for_pair: element failed to certify out of cap target");
      }
      basis.verdicts_out[i] = std::move(out);
    }
    return basis;
  }
  throw UsageError("spaceable_for_pair: nothing in the chain avoids linf");
}

DecomposeReport decompose(const ComplexSeq& f, const SpaceableBasis& basis, std::uint64_t K) {
  if (K < 2) throw UsageError("decompose: need at least two positions per block");
  DecomposeReport report;
  const bool exact_tier = f.has_exact();

  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const ComplexSeq& y = basis.elements[i];
    const BlockId j = static_cast<BlockId>(i + 1);
    BlockRatioReport row;
    row.block = j;

    if (exact_tier && y.has_exact()) {
      std::optional<RationalComplex> common;
      std::optional<std::uint64_t> bad;
      std::vector<Complex> ratios;
      for (std::uint64_t k = 1; k <= K; ++k) {
        const Index n = index_of(j, k);
        const RationalComplex fv = f.at_exact(n);
        const RationalComplex yv = y.at_exact(n);
        if (yv.is_zero()) throw std::logic_error("decompose: basis element vanishes on its block");
        const RationalComplex ratio = fv / yv;
        ratios.push_back(ratio.to_complex());
        if (!common) {
          common = ratio;
        } else if (!(ratio == *common)) {
          bad = k;
          break;
        }
      }
      if (bad) {
        row.result = BlockMismatch{*bad, std::move(ratios)};
        report.all_consistent = false;
      } else {
        row.result = BlockConsistent{common->to_complex(), *common};
      }
    } else {
      std::optional<Complex> common;
      std::optional<std::uint64_t> bad;
      std::vector<Complex> ratios;
      for (std::uint64_t k = 1; k <= K; ++k) {
        const Index n = index_of(j, k);
        const Complex yv = y.at(n);
        if (yv == Complex{0.0, 0.0}) {
          throw std::logic_error("decompose: basis element vanishes on its block");
        }
        const Complex ratio = f.at(n) / yv;
        ratios.push_back(ratio);
        if (!common) {
          common = ratio;
          continue;
        }
        const double scale = std::max({std::abs(*common), std::abs(ratio), 1e-300});
        if (std::abs(ratio - *common) > kRatioTolerance * scale) {
          bad = k;
          break;
        }
      }
      if (bad) {
        row.result = BlockMismatch{*bad, std::move(ratios)};
        report.all_consistent = false;
      } else {
        row.result = BlockConsistent{*common, std::nullopt};
      }
    }
    report.blocks.push_back(std::move(row));
  }
  return report;
}

std::vector<Complex> DecomposeReport::coefficients() const {
  std::vector<Complex> out;
  out.reserve(blocks.size());
  for (const auto& row : blocks) {
    if (const auto* ok = std::get_if<BlockConsistent>(&row.result)) {
      out.push_back(ok->c);
    } else {
      out.push_back(Complex{std::numeric_limits<double>::quiet_NaN(), 0.0});
    }
  }
  return out;
}

SpaceableEscape verify_spaceable_combo(std::span<const Complex> coeffs,
                                       const SpaceableBasis& basis, double M) {
  if (coeffs.empty() || coeffs.size() > basis.elements.size()) {
    throw UsageError("verify_spaceable_combo: coefficient list empty or longer than the basis");
  }
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != Complex{0.0, 0.0}) {
      pick = i;
      break;
    }
  }
  if (!pick) throw UsageError("verify_spaceable_combo: all coefficients are zero");
  const BlockId j = static_cast<BlockId>(*pick + 1);
  const double c_abs = std::abs(coeffs[*pick]);

  SpaceableEscape out;
  out.block = j;
  out.threshold = M;

  if (const auto* b = std::get_if<double>(&basis.target)) {
    if (!(M > 0.0)) throw UsageError("verify_spaceable_combo: threshold must be > 0");
    PartialSumDivergence div;
    div.exponent = *b;
    div.block = j;
    div.form = GrowthForm::kHarmonicLog;
    div.scale = std::pow(c_abs, *b);
    div.skip = 0;
    out.point = div.escape(M);
    std::ostringstream os;
    os << "on block " << j << " the combination is exactly c_j y_j; b-sum over the first K "
       << "positions >= " << div.scale << " * ln(K+1) crosses " << M;
    out.derivation = os.str();
    out.evidence = std::move(div);
  } else {
    NonVanishingDivergence div;
    div.block = j;
    div.floor_abs = c_abs;
    div.skip = 0;
    std::ostringstream os;
    os << "the combination holds the constant c_j (modulus " << c_abs << ") on all of block " << j;
    out.derivation = os.str();
    out.evidence = std::move(div);
  }
  return out;
}

}  // namespace genlab
