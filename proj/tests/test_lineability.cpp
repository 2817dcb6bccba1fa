#include "doctest.h"

#include <cmath>

#include "genlab/lineability.hpp"
#include "genlab/sampling.hpp"
#include "oracles.hpp"

using namespace genlab;
using doctest::Approx;

TEST_CASE("enumeration starts at the zero sequence") {
  const RationalSeq z = enumerate_rational(1);
  CHECK(z.entries.empty());
  CHECK(index_of_seq(z) == 1);
  CHECK_THROWS_AS(enumerate_rational(0), UsageError);
}

TEST_CASE("the sequence (1, 0, 0, ...) sits at index 2") {
  const RationalSeq s = enumerate_rational(2);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0] == RationalComplex{Rational(1), Rational(0)});

  RationalSeq probe;
  probe.entries = {RationalComplex{Rational(1), Rational(0)}};
  CHECK(index_of_seq(probe) == 2);
}

TEST_CASE("enumeration round trip") {
  for (std::uint64_t j = 1; j <= 10000; ++j) {
    CHECK(index_of_seq(enumerate_rational(j)) == j);
  }
}

TEST_CASE("trailing zeros do not change the code") {
  RationalSeq padded;
  padded.entries = {RationalComplex{Rational(2, 3), Rational(-1)}, RationalComplex{},
                    RationalComplex{Rational(5), Rational(0)}, RationalComplex{}, RationalComplex{}};
  RationalSeq trimmed;
  trimmed.entries = {padded.entries[0], padded.entries[1], padded.entries[2]};
  CHECK(index_of_seq(padded) == index_of_seq(trimmed));
}

TEST_CASE("scale_into matches the closed-form bounds") {
  // b = 1, level 2, exponents {2, 1.5}: bounds sqrt(2) and 3^(2/3), radius
  // 1/2, so the largest admissible power of two is 1/8.
  const ComplexSeq y = divergent_block_seq(1.0, 2);
  const auto V = NeighborhoodSpec::at_level(CapAboveSpace{1.0, nullptr, false}, 2);
  REQUIRE(V.exponents.size() == 2);
  CHECK(V.exponents[0] == Approx(2.0));
  CHECK(V.exponents[1] == Approx(1.5));
  const auto choice = scale_into(y, V);
  REQUIRE(choice.has_value());
  CHECK(choice->c == 0.125);
  for (double bound : choice->certified_bounds) CHECK(bound < V.radius);
}

TEST_CASE("scale_into shrinks with the level and with the input") {
  const CapAboveSpace cap{1.0, nullptr, false};
  const ComplexSeq y = divergent_block_seq(1.0, 3);
  double prev = 1e9;
  for (int j = 1; j <= 6; ++j) {
    const auto choice = scale_into(y, NeighborhoodSpec::at_level(cap, j));
    REQUIRE(choice.has_value());
    CHECK(choice->c <= prev);
    prev = choice->c;
  }
  // doubling the sequence halves the admissible scale (or better)
  const Complex coeffs[1] = {Complex{2.0, 0.0}};
  const ComplexSeq seqs[1] = {y};
  const ComplexSeq y2 = linear_combine(coeffs, seqs);
  const auto base = scale_into(y, NeighborhoodSpec::at_level(cap, 4));
  const auto doubled = scale_into(y2, NeighborhoodSpec::at_level(cap, 4));
  REQUIRE(base.has_value());
  REQUIRE(doubled.has_value());
  CHECK(doubled->c <= base->c / 2.0 * (1.0 + 1e-12));
}

TEST_CASE("scale_into rejects bad inputs") {
  const ComplexSeq y = divergent_block_seq(2.0, 1);  // gamma = 1/2, b = 2
  NeighborhoodSpec V;
  V.level = 1;
  V.exponents = {1.5};  // not above b = 2
  V.radius = 1.0;
  CHECK_THROWS_AS(scale_into(y, V), UsageError);
  NeighborhoodSpec W;
  W.level = 1;
  W.exponents = {3.0};
  W.radius = 1.0;
  CHECK_THROWS_AS(scale_into(ComplexSeq::unit(1), W), UsageError);
}

TEST_CASE("lineable basis structure") {
  const LineableBasis basis = lineable_basis(1.0, 4);
  REQUIRE(basis.elements.size() == 4);

  // f_1: x_1 is the zero sequence, so f_1 = c_1 y_1 on all of block 1
  const LineableElement& e1 = basis.elements[0];
  CHECK(e1.support_bound == 0);
  for (std::uint64_t k = 1; k <= 50; ++k) {
    const Index n = index_of(1, k);
    CHECK(e1.f.at(n) == Complex{e1.c / static_cast<double>(k), 0.0});
  }
  CHECK(e1.f.at(2) == Complex{0.0, 0.0});  // off block 1

  // general structure: agrees with x_j below n_j, c_j y_j on the block
  // beyond, zero elsewhere
  for (const LineableElement& el : basis.elements) {
    for (Index n = 1; n <= std::max<Index>(el.support_bound, 1); ++n) {
      CHECK(el.f.at(n) == el.x.at(n));
    }
    for (std::uint64_t k = 1; k <= 30; ++k) {
      const Index n = index_of(el.j, k);
      if (n <= el.support_bound) continue;
      CHECK(el.f.at(n) == Complex{el.c / static_cast<double>(k), 0.0});
    }
    for (Index n = el.support_bound + 1; n <= el.support_bound + 40; ++n) {
      if (block_of(n).first == el.j) continue;
      CHECK(el.f.at(n) == Complex{0.0, 0.0});
    }
  }
}

TEST_CASE("lineable basis elements approximate their targets in every scheduled metric") {
  const LineableBasis basis = lineable_basis(1.0, 5);
  const LineableElement& e5 = basis.elements[4];
  const auto V = NeighborhoodSpec::at_level(basis.ambient, 5);
  for (double pk : V.exponents) {
    const Interval d = lp_distance(e5.f, e5.x, pk, 100000);
    CHECK(d.hi < 1.0 / 5.0);
  }
}

TEST_CASE("lineable basis membership split") {
  const LineableBasis basis = lineable_basis(1.0, 3);
  for (const LineableElement& el : basis.elements) {
    CHECK(is_certified_in(membership(el.f, cap_above_space(1.0))));
    CHECK(is_certified_out(membership(el.f, lp_space(1.0))));
    // the same elements certify into any larger lp (the reduction step)
    CHECK(is_certified_in(membership(el.f, lp_space(2.0))));
    CHECK(is_certified_in(membership(el.f, lp_space(1.5))));
  }
}

TEST_CASE("density surrogate in the frechet metric") {
  const LineableBasis basis = lineable_basis(1.0, 6);
  for (const LineableElement& el : basis.elements) {
    const int depth = static_cast<int>(el.j);
    const Interval d = frechet_distance(el.f, el.x, SpaceSpec(basis.ambient), depth, 20000);
    CHECK(d.hi < 1.0 / static_cast<double>(el.j) + std::pow(0.5, depth) + 1e-9);
  }
}

TEST_CASE("combination escape certificates") {
  const LineableBasis basis = lineable_basis(1.0, 3);

  // single basis element, small threshold: cross-check against summation
  {
    const Complex coeffs[1] = {Complex{1.0, 0.0}};
    const ComboEscape esc = verify_lineable_combo(coeffs, basis, 1.0);
    REQUIRE(esc.point.position.has_value());
    const auto direct = oracles::direct_block_crossing(basis.elements[0].f, 1.0, 1, 1.0,
                                                       *esc.point.position);
    REQUIRE(direct.has_value());
    CHECK(*direct <= *esc.point.position);
  }

  // divergence is read on the block of the last nonzero coefficient
  {
    const Complex coeffs[2] = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    const ComboEscape esc = verify_lineable_combo(coeffs, basis, 5.0);
    CHECK(esc.point.block == 2);
  }

  // the zero last coefficient is a usage error
  {
    const Complex coeffs[2] = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    CHECK_THROWS_AS(verify_lineable_combo(coeffs, basis, 5.0), UsageError);
  }
}

TEST_CASE("random combinations escape with certified indices") {
  const LineableBasis basis = lineable_basis(1.0, 6);
  RationalSampler sampler(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lambda = sampler.vector_with_last_nonzero(6);
    const auto coeffs = to_complex(lambda);
    for (double M : {10.0, 1000.0}) {
      const ComboEscape esc = verify_lineable_combo(coeffs, basis, M);
      CHECK(esc.point.log_position > 0.0);
      CHECK(esc.scale > 0.0);
    }
  }
}

TEST_CASE("combination values on the last block match the certificate premise") {
  // beyond the common support bound the combination equals a_N c_N y_N on A_N
  const LineableBasis basis = lineable_basis(1.0, 4);
  const std::vector<RationalComplex> lambda = {
      {Rational(1, 2), Rational(1, 3)},
      {Rational(-2), Rational(0)},
      {Rational(0), Rational(0)},
      {Rational(3, 4), Rational(-1)},
  };
  std::vector<ComplexSeq> fs;
  for (const auto& el : basis.elements) fs.push_back(el.f);
  const ComplexSeq combo = linear_combine(std::span<const RationalComplex>(lambda),
                                          std::span<const ComplexSeq>(fs));
  Index bound = 0;
  for (const auto& el : basis.elements) bound = std::max(bound, el.support_bound);
  const Complex expected_scale = lambda[3].to_complex() * basis.elements[3].c;
  for (std::uint64_t k = 1; k <= 40; ++k) {
    const Index n = index_of(4, k);
    if (n <= bound) continue;
    CHECK(std::abs(combo.at(n) - expected_scale / static_cast<double>(k)) < 1e-15);
  }
}
