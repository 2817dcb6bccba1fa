#include "genlab/witnesses.hpp"

#include <sstream>

namespace genlab {

ComplexSeq divergent_block_seq(double b, BlockId j) {
  if (!(b > 0.0)) throw UsageError("divergent_block_seq: b must be > 0");
  if (j == 0) throw UsageError("divergent_block_seq: block id must be >= 1");
  return ComplexSeq::power_law_on_block(1.0 / b, j);
}

namespace {

ComplexSeq ones_sequence() {
  BlockConstantCert cert;
  cert.constants = [](BlockId) { return Complex{1.0, 0.0}; };
  cert.sup_abs = 1.0;
  cert.first_nonzero = 1;
  return ComplexSeq::block_constant(std::move(cert));
}

[[noreturn]] void bad_pair(const SpaceSpec& y, const SpaceSpec& x, const std::string& why) {
  throw UsageError("chain_witness: (" + describe(y) + ", " + describe(x) + ") " + why);
}

}  // namespace

WitnessRecord chain_witness(const SpaceSpec& ambient, const SpaceSpec& subspace) {
  ComplexSeq seq;
  std::string desc;

  if (std::holds_alternative<LInfSpace>(ambient)) {
    if (!std::holds_alternative<C0Space>(subspace)) {
      bad_pair(ambient, subspace, "is not an adjacent chain pair (linf sits above c0)");
    }
    seq = ones_sequence();
    desc = "constant ones: bounded, never vanishing";
  } else if (std::holds_alternative<C0Space>(ambient)) {
    const auto* cap = std::get_if<CapAboveSpace>(&subspace);
    if (!cap) bad_pair(ambient, subspace, "is not a chain pair (c0 sits above cap spaces)");
    const double gamma = 1.0 / (cap->a + 1.0);
    seq = ComplexSeq::power_law(gamma);
    std::ostringstream os;
    os << "n^(-" << gamma << "): vanishes, but the " << cap->exponent(1)
       << "-sum already diverges";
    desc = os.str();
  } else if (const auto* capy = std::get_if<CapAboveSpace>(&ambient)) {
    const auto* lp = std::get_if<LpSpace>(&subspace);
    if (!lp || lp->p != capy->a) {
      bad_pair(ambient, subspace, "is not a chain pair (cap:a sits directly above lp:a)");
    }
    if (!(lp->p > 0.0)) bad_pair(ambient, subspace, "needs a > 0");
    const double gamma = 1.0 / lp->p;
    seq = ComplexSeq::power_law(gamma);
    std::ostringstream os;
    os << "n^(-" << gamma << "): p-summable for every p > " << lp->p << ", harmonic at " << lp->p;
    desc = os.str();
  } else {
    const auto& lpy = std::get<LpSpace>(ambient);
    const auto* cap = std::get_if<CapAboveSpace>(&subspace);
    if (!cap || !(cap->a < lpy.p)) {
      bad_pair(ambient, subspace, "is not a chain pair (lp:p sits above cap:a only for a < p)");
    }
    const double gamma = 2.0 / (cap->a + lpy.p);
    seq = ComplexSeq::power_law(gamma);
    std::ostringstream os;
    os << "n^(-" << gamma << "): in lp(" << lpy.p << ") since gamma*p = " << gamma * lpy.p
       << " > 1, out of cap(" << cap->a << ") since gamma*a = " << gamma * cap->a << " < 1";
    desc = os.str();
  }

  WitnessRecord rec;
  rec.ambient = ambient;
  rec.subspace = subspace;
  rec.sequence = seq;
  rec.description = desc;
  rec.verdict_in = membership(seq, ambient);
  rec.verdict_out = membership(seq, subspace);
  if (!is_certified_in(rec.verdict_in) || !is_certified_out(rec.verdict_out)) {
    throw std::logic_error("chain_witness: canonical witness failed to certify for (" +
                           describe(ambient) + ", " + describe(subspace) + ")");
  }
  return rec;
}

}  // namespace genlab
