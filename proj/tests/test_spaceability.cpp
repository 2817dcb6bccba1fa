#include "doctest.h"

#include <cmath>

#include "genlab/sampling.hpp"
#include "genlab/spaceability.hpp"
#include "oracles.hpp"

using namespace genlab;
using doctest::Approx;

TEST_CASE("block constant embedding") {
  const ComplexSeq ones = block_constant_embed(BlockConstants::uniform({1.0, 0.0}));
  for (Index n = 1; n <= 32; ++n) CHECK(ones.at(n) == Complex{1.0, 0.0});

  // indicator of block 1 = the odd numbers
  const ComplexSeq odd = block_constant_embed(BlockConstants::from_list({{1.0, 0.0}}));
  for (std::uint64_t k = 1; k <= 20; ++k) {
    CHECK(odd.at(2 * k - 1) == Complex{1.0, 0.0});
    CHECK(odd.at(2 * k) == Complex{0.0, 0.0});
  }
  CHECK(is_certified_out(membership(odd, c0_space())));

  // decaying constants still fail c0: every block is infinite
  BlockConstants reciprocal;
  reciprocal.value = [](BlockId m) { return Complex{1.0 / static_cast<double>(m), 0.0}; };
  reciprocal.sup_abs = 1.0;
  reciprocal.first_nonzero = 1;
  const ComplexSeq rec = block_constant_embed(reciprocal);
  CHECK(is_certified_out(membership(rec, c0_space())));
  CHECK(is_certified_in(membership(rec, linf_space())));
}

TEST_CASE("spaceable basis construction and preconditions") {
  const SpaceableBasis in_c0 = spaceable_basis(c0_space(), 1.0, 3);
  REQUIRE(in_c0.elements.size() == 3);
  for (std::uint64_t j = 1; j <= 3; ++j) {
    for (std::uint64_t k = 1; k <= 10; ++k) {
      CHECK(in_c0.elements[j - 1].at(index_of(j, k)) ==
            Complex{1.0 / static_cast<double>(k), 0.0});
    }
  }

  const SpaceableBasis in_l2 = spaceable_basis(lp_space(2.0), 1.0, 2);
  for (const Verdict& v : in_l2.verdicts_in) {
    REQUIRE(is_certified_in(v));
    CHECK(std::get<CertifiedIn>(v).upper_bound <= 2.0 * (1.0 + 1e-9));
  }

  CHECK_THROWS_AS(spaceable_basis(lp_space(1.0), 1.0, 2), UsageError);
  CHECK_THROWS_AS(spaceable_basis(lp_space(0.5), 1.0, 2), UsageError);
  CHECK_THROWS_AS(spaceable_basis(cap_above_space(0.5), 1.0, 2), UsageError);
}

TEST_CASE("decompose recovers simple combinations") {
  const SpaceableBasis basis = spaceable_basis(c0_space(), 1.0, 4);

  {
    const Complex coeffs[4] = {{2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const ComplexSeq f = linear_combine(coeffs, std::span<const ComplexSeq>(basis.elements));
    const DecomposeReport rep = decompose(f, basis, 6);
    REQUIRE(rep.all_consistent);
    const auto cs = rep.coefficients();
    CHECK(cs[0] == Complex{2.0, 0.0});
    CHECK(cs[1] == Complex{0.0, 0.0});
    CHECK(cs[2] == Complex{0.0, 0.0});
  }
  {
    const Complex coeffs[4] = {{3.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-5.0, 0.0}};
    const ComplexSeq f = linear_combine(coeffs, std::span<const ComplexSeq>(basis.elements));
    const auto cs = decompose(f, basis, 8).coefficients();
    CHECK(cs[0] == Complex{3.0, 0.0});
    CHECK(cs[3] == Complex{-5.0, 0.0});
  }
  CHECK_THROWS_AS(decompose(ComplexSeq::zero(), basis, 1), UsageError);
}

TEST_CASE("decompose flags pointwise perturbations") {
  const SpaceableBasis basis = spaceable_basis(c0_space(), 1.0, 2);
  const ComplexSeq y1 = basis.elements[0];
  const Index first = index_of(1, 1);
  const ComplexSeq perturbed = ComplexSeq::opaque([y1, first](Index n) {
    return n == first ? y1.at(n) + Complex{1.0, 0.0} : y1.at(n);
  });
  const DecomposeReport rep = decompose(perturbed, basis, 6);
  CHECK(!rep.all_consistent);
  const auto* mism = std::get_if<BlockMismatch>(&rep.blocks[0].result);
  REQUIRE(mism != nullptr);
  CHECK(mism->position == 2);  // the ratio at position 2 disagrees with position 1
}

TEST_CASE("decompose exact tier recovers rational coefficients exactly") {
  const SpaceableBasis basis = spaceable_basis(c0_space(), 1.0, 5);
  RationalSampler sampler(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lambda = sampler.vector_with_last_nonzero(5);
    const ComplexSeq f = linear_combine(std::span<const RationalComplex>(lambda),
                                        std::span<const ComplexSeq>(basis.elements));
    REQUIRE(f.has_exact());
    const DecomposeReport rep = decompose(f, basis, 8);
    REQUIRE(rep.all_consistent);
    for (std::size_t j = 0; j < 5; ++j) {
      const auto* ok = std::get_if<BlockConsistent>(&rep.blocks[j].result);
      REQUIRE(ok != nullptr);
      REQUIRE(ok->c_exact.has_value());
      CHECK(*ok->c_exact == lambda[j]);
    }
  }
}

TEST_CASE("decompose verdict is stable under truncation refinement") {
  const SpaceableBasis basis = spaceable_basis(c0_space(), 1.0, 3);
  const std::vector<RationalComplex> lambda = {
      {Rational(1, 3), Rational(0)}, {Rational(0), Rational(-7, 2)}, {Rational(2), Rational(2)}};
  const ComplexSeq f = linear_combine(std::span<const RationalComplex>(lambda),
                                      std::span<const ComplexSeq>(basis.elements));
  const DecomposeReport r1 = decompose(f, basis, 4);
  const DecomposeReport r2 = decompose(f, basis, 8);
  const DecomposeReport r3 = decompose(f, basis, 16);
  CHECK(r1.all_consistent == r2.all_consistent);
  CHECK(r2.all_consistent == r3.all_consistent);
  CHECK(r1.coefficients() == r2.coefficients());
  CHECK(r2.coefficients() == r3.coefficients());
}

TEST_CASE("spaceable combination escapes") {
  const SpaceableBasis basis = spaceable_basis(c0_space(), 1.0, 3);
  {
    const Complex coeffs[1] = {Complex{1.0, 0.0}};
    const SpaceableEscape esc = verify_spaceable_combo(coeffs, basis, 5.0);
    REQUIRE(esc.point.has_value());
    REQUIRE(esc.point->position.has_value());
    CHECK(std::log(static_cast<double>(*esc.point->position) + 1.0) > 5.0);
    CHECK(*esc.point->position <= 149);  // ceil(e^5)
    // direct summation crossing agrees with or precedes the certified one
    const auto direct =
        oracles::direct_block_crossing(basis.elements[0], 1.0, 1, 5.0, *esc.point->position);
    REQUIRE(direct.has_value());
    CHECK(*direct <= *esc.point->position);
  }
  {
    const Complex coeffs[2] = {Complex{0.0, 0.0}, Complex{2.0, 0.0}};
    const SpaceableEscape esc = verify_spaceable_combo(coeffs, basis, 5.0);
    CHECK(esc.block == 2);
    const auto* ps = std::get_if<PartialSumDivergence>(&esc.evidence);
    REQUIRE(ps != nullptr);
    CHECK(ps->scale == Approx(2.0));
  }
  {
    const Complex coeffs[2] = {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    CHECK_THROWS_AS(verify_spaceable_combo(coeffs, basis, 5.0), UsageError);
  }
}

TEST_CASE("indicator basis escapes c0 by non-vanishing evidence") {
  const SpaceableBasis basis = block_indicator_basis(3);
  const Complex coeffs[2] = {Complex{0.0, 0.0}, Complex{0.5, -0.5}};
  const SpaceableEscape esc = verify_spaceable_combo(coeffs, basis, 0.0);
  CHECK(esc.block == 2);
  const auto* nv = std::get_if<NonVanishingDivergence>(&esc.evidence);
  REQUIRE(nv != nullptr);
  CHECK(nv->floor_abs == Approx(std::abs(Complex{0.5, -0.5})));
  // the witness index map really produces indices with that value
  const ComplexSeq f = linear_combine(coeffs, std::span<const ComplexSeq>(basis.elements));
  const Index w = nv->witness_beyond(1000);
  CHECK(w > 1000);
  CHECK(std::abs(f.at(w)) >= nv->floor_abs * (1.0 - 1e-12));
}

TEST_CASE("verdict consistency across the chain: avoiding lp(b) also avoids cap(a)") {
  // a < b: every element certified out of lp(b) is out of cap(a) by inclusion;
  // the verdicts must agree on the direct route as well.
  const SpaceableBasis basis = spaceable_basis(lp_space(2.0), 1.5, 3);
  for (const ComplexSeq& y : basis.elements) {
    CHECK(is_certified_out(membership(y, lp_space(1.5))));
    CHECK(is_certified_out(membership(y, cap_above_space(1.0))));
  }
}

TEST_CASE("a basis exists for every chain pair") {
  const std::vector<SpaceSpec> chain = {
      linf_space(),        c0_space(),           cap_above_space(2.0), lp_space(2.0),
      cap_above_space(1.0), lp_space(1.0),       cap_above_space(0.0)};
  for (std::size_t yi = 0; yi < chain.size(); ++yi) {
    for (std::size_t xi = yi + 1; xi < chain.size(); ++xi) {
      const SpaceableBasis basis = spaceable_for_pair(chain[yi], chain[xi], 2);
      REQUIRE(basis.elements.size() == 2);
      for (const Verdict& v : basis.verdicts_in) CHECK(is_certified_in(v));
      for (const Verdict& v : basis.verdicts_out) CHECK(is_certified_out(v));
    }
  }
}
