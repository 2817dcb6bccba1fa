#include "doctest.h"

#include <cmath>
#include <set>

#include "genlab/witnesses.hpp"
#include "oracles.hpp"

using namespace genlab;
using doctest::Approx;

TEST_CASE("canonical block coding formulas") {
  CHECK(index_of(1, 1) == 1);
  CHECK(index_of(2, 3) == 10);
  CHECK(block_of(4) == std::pair<BlockId, std::uint64_t>{3, 1});
  CHECK_THROWS_AS(index_of(0, 0), UsageError);
  CHECK_THROWS_AS(index_of(1, 0), UsageError);
  CHECK_THROWS_AS(block_of(0), UsageError);
}

TEST_CASE("block coding is a bijection up to 10^6") {
  for (Index n = 1; n <= 1000000; ++n) {
    const auto [j, k] = block_of(n);
    CHECK(index_of(j, k) == n);
  }
}

TEST_CASE("positions_at_or_below counts block elements") {
  for (BlockId j = 1; j <= 6; ++j) {
    for (Index n : {Index{1}, Index{17}, Index{256}, Index{100000}}) {
      std::uint64_t direct = 0;
      for (std::uint64_t k = 1; index_of(j, k) <= n; ++k) ++direct;
      CHECK(IndexFamily::positions_at_or_below(j, n) == direct);
    }
  }
}

TEST_CASE("divergent block sequences") {
  const ComplexSeq y = divergent_block_seq(1.0, 1);
  CHECK(y.at(3) == Complex{0.5, 0.0});  // n=3 is position 2 of the odd block
  CHECK(y.at(2) == Complex{0.0, 0.0});

  // partial harmonic sum over the first 100 block positions
  KahanSum acc;
  for (std::uint64_t k = 1; k <= 100; ++k) acc.add(std::abs(y.at(index_of(1, k))));
  CHECK(acc.value() == Approx(5.187377517639621).epsilon(1e-12));
  CHECK(acc.value() >= std::log(101.0));

  // 2-sum bounded by 1 + b/(p-b) = 2
  const Verdict v = membership(y, lp_space(2.0));
  REQUIRE(is_certified_in(v));
  CHECK(std::get<CertifiedIn>(v).upper_bound <= 2.0 * (1.0 + 1e-9));

  CHECK_THROWS_AS(divergent_block_seq(0.0, 1), UsageError);
  CHECK_THROWS_AS(divergent_block_seq(1.0, 0), UsageError);
}

TEST_CASE("blocks have disjoint supports") {
  const ComplexSeq y1 = divergent_block_seq(1.0, 1);
  const ComplexSeq y2 = divergent_block_seq(1.0, 2);
  const ComplexSeq y5 = divergent_block_seq(0.5, 5);
  for (Index n = 1; n <= 10000; ++n) {
    int nonzero = 0;
    nonzero += y1.at(n) != Complex{0.0, 0.0};
    nonzero += y2.at(n) != Complex{0.0, 0.0};
    nonzero += y5.at(n) != Complex{0.0, 0.0};
    CHECK(nonzero <= 1);
  }
}

namespace {

void check_pair(const SpaceSpec& ambient, const SpaceSpec& sub) {
  const WitnessRecord rec = chain_witness(ambient, sub);
  CHECK(is_certified_in(rec.verdict_in));
  CHECK(is_certified_out(rec.verdict_out));
}

}  // namespace

TEST_CASE("the full witness table certifies") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {0.5, 1.5}, {0.25, 0.75}}) {
    check_pair(linf_space(), c0_space());
    check_pair(c0_space(), cap_above_space(b));
    check_pair(cap_above_space(b), lp_space(b));
    check_pair(lp_space(b), cap_above_space(a));
    check_pair(cap_above_space(a), lp_space(a));
    check_pair(lp_space(a), cap_above_space(0.0));
  }
}

TEST_CASE("witness for (linf, c0) is the constant-ones sequence") {
  const WitnessRecord rec = chain_witness(linf_space(), c0_space());
  for (Index n = 1; n <= 64; ++n) CHECK(rec.sequence.at(n) == Complex{1.0, 0.0});
}

TEST_CASE("witness for (cap:1, lp:1) is the harmonic power law") {
  const WitnessRecord rec = chain_witness(cap_above_space(1.0), lp_space(1.0));
  CHECK(rec.sequence.at(4) == Complex{0.25, 0.0});
}

TEST_CASE("invalid chain pairs are rejected") {
  CHECK_THROWS_AS(chain_witness(c0_space(), linf_space()), UsageError);
  CHECK_THROWS_AS(chain_witness(linf_space(), lp_space(1.0)), UsageError);
  CHECK_THROWS_AS(chain_witness(lp_space(1.0), cap_above_space(2.0)), UsageError);
  CHECK_THROWS_AS(chain_witness(cap_above_space(1.0), lp_space(2.0)), UsageError);
}

TEST_CASE("exponent conventions: the reciprocal pattern is what certifies") {
  // For (lp:1, cap:0) the witness must lie in l1; the plain exponent a/2
  // reading (gamma = 0.5) fails this, the reciprocal reading (gamma = 2)
  // certifies on both sides.
  CHECK(is_certified_out(membership(ComplexSeq::power_law(0.5), lp_space(1.0))));
  CHECK(is_certified_in(membership(ComplexSeq::power_law(2.0), lp_space(1.0))));
  CHECK(is_certified_out(membership(ComplexSeq::power_law(2.0), cap_above_space(0.0))));
  const WitnessRecord rec = chain_witness(lp_space(1.0), cap_above_space(0.0));
  CHECK(rec.sequence.at(2) == Complex{0.25, 0.0});  // n^(-2)
}
