#include "genlab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "genlab/blocks.hpp"

namespace genlab {

ComplexSeq ComplexSeq::zero() {
  return ComplexSeq([](Index) { return Complex{0.0, 0.0}; }, FiniteSupportCert{0},
                    [](Index) { return RationalComplex{}; });
}

ComplexSeq ComplexSeq::finite_support(std::vector<Complex> vals) {
  while (!vals.empty() && vals.back() == Complex{0.0, 0.0}) vals.pop_back();
  auto data = std::make_shared<std::vector<Complex>>(std::move(vals));
  const Index n_max = data->size();
  return ComplexSeq(
      [data](Index n) { return n <= data->size() ? (*data)[n - 1] : Complex{0.0, 0.0}; },
      FiniteSupportCert{n_max});
}

ComplexSeq ComplexSeq::finite_support_exact(std::vector<RationalComplex> vals) {
  while (!vals.empty() && vals.back().is_zero()) vals.pop_back();
  auto data = std::make_shared<std::vector<RationalComplex>>(std::move(vals));
  const Index n_max = data->size();
  return ComplexSeq(
      [data](Index n) { return n <= data->size() ? (*data)[n - 1].to_complex() : Complex{0.0, 0.0}; },
      FiniteSupportCert{n_max},
      [data](Index n) { return n <= data->size() ? (*data)[n - 1] : RationalComplex{}; });
}

ComplexSeq ComplexSeq::unit(Index n) {
  if (n == 0) throw UsageError("unit: index must be >= 1");
  std::vector<RationalComplex> vals(n);
  vals[n - 1] = RationalComplex{Rational(1), Rational(0)};
  return finite_support_exact(std::move(vals));
}

ComplexSeq ComplexSeq::power_law(double gamma) {
  if (!(gamma > 0.0)) throw UsageError("power_law: gamma must be > 0");
  return ComplexSeq([gamma](Index n) { return Complex{std::pow(static_cast<double>(n), -gamma), 0.0}; },
                    PowerLawCert{gamma, 0});
}

ComplexSeq ComplexSeq::power_law_on_block(double gamma, BlockId j) {
  if (!(gamma > 0.0)) throw UsageError("power_law_on_block: gamma must be > 0");
  if (j == 0) return power_law(gamma);
  // Exact evaluator exists when gamma is a positive integer (values 1/k^m).
  ExactEval exact = nullptr;
  const double g_round = std::round(gamma);
  if (g_round == gamma && g_round >= 1.0 && g_round <= 20.0) {
    const int m = static_cast<int>(g_round);
    exact = [j, m](Index n) {
      const auto [jj, k] = block_of(n);
      if (jj != j) return RationalComplex{};
      std::int64_t den = 1;
      for (int i = 0; i < m; ++i) {
        if (k > 9000 && m > 1) throw std::overflow_error("exact power evaluation overflow");
        den *= static_cast<std::int64_t>(k);
      }
      return RationalComplex{Rational(1, den), Rational(0)};
    };
  }
  return ComplexSeq(
      [gamma, j](Index n) {
        const auto [jj, k] = block_of(n);
        if (jj != j) return Complex{0.0, 0.0};
        return Complex{std::pow(static_cast<double>(k), -gamma), 0.0};
      },
      PowerLawCert{gamma, j}, std::move(exact));
}

ComplexSeq ComplexSeq::block_constant(BlockConstantCert cert) {
  if (!cert.constants) throw UsageError("block_constant: missing constants rule");
  if (!(cert.sup_abs >= 0.0) || !std::isfinite(cert.sup_abs)) {
    throw UsageError("block_constant: sup bound must be finite");
  }
  auto rule = cert.constants;
  return ComplexSeq([rule](Index n) { return rule(block_of(n).first); }, std::move(cert));
}

ComplexSeq ComplexSeq::opaque(Eval eval) { return ComplexSeq(std::move(eval), OpaqueCert{}); }

namespace {

struct Term {
  Complex coeff;
  ComplexSeq seq;
  std::optional<RationalComplex> exact_coeff;
};

ComplexSeq combine(std::vector<Term> terms) {
  std::erase_if(terms, [](const Term& t) { return t.coeff == Complex{0.0, 0.0}; });
  if (terms.empty()) return ComplexSeq::zero();

  bool all_finite = true;
  Index n_max = 0;
  bool any_opaque = false;
  for (const Term& t : terms) {
    if (const auto* fs = t.seq.certificate().finite_support()) {
      n_max = std::max(n_max, fs->n_max);
    } else {
      all_finite = false;
    }
    if (t.seq.certificate().is_opaque()) any_opaque = true;
  }

  TailCertificate cert = OpaqueCert{};
  if (!any_opaque) {
    if (all_finite) {
      cert = FiniteSupportCert{n_max};
    } else {
      LinearCombinationCert lc;
      lc.terms.reserve(terms.size());
      for (const Term& t : terms) lc.terms.emplace_back(t.coeff, t.seq.certificate());
      cert = TailCertificate(std::move(lc));
    }
  }

  auto shared = std::make_shared<std::vector<Term>>(std::move(terms));
  ComplexSeq::Eval eval = [shared](Index n) {
    Complex acc{0.0, 0.0};
    for (const Term& t : *shared) acc += t.coeff * t.seq.at(n);
    return acc;
  };

  ComplexSeq::ExactEval exact = nullptr;
  const bool exact_ok = std::all_of(shared->begin(), shared->end(), [](const Term& t) {
    return t.exact_coeff.has_value() && t.seq.has_exact();
  });
  if (exact_ok) {
    exact = [shared](Index n) {
      RationalComplex acc;
      for (const Term& t : *shared) acc = acc + (*t.exact_coeff) * t.seq.at_exact(n);
      return acc;
    };
  }
  return ComplexSeq(std::move(eval), std::move(cert), std::move(exact));
}

}  // namespace

ComplexSeq linear_combine(std::span<const Complex> coeffs, std::span<const ComplexSeq> seqs) {
  if (coeffs.empty() || coeffs.size() != seqs.size()) {
    throw UsageError("linear_combine: coefficient and sequence lists must be nonempty and equal length");
  }
  std::vector<Term> terms;
  terms.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.push_back({coeffs[i], seqs[i], std::nullopt});
  return combine(std::move(terms));
}

ComplexSeq linear_combine(std::span<const RationalComplex> coeffs, std::span<const ComplexSeq> seqs) {
  if (coeffs.empty() || coeffs.size() != seqs.size()) {
    throw UsageError("linear_combine: coefficient and sequence lists must be nonempty and equal length");
  }
  std::vector<Term> terms;
  terms.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back({coeffs[i].to_complex(), seqs[i], coeffs[i]});
  }
  return combine(std::move(terms));
}

}  // namespace genlab
