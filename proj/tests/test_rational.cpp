#include "doctest.h"

#include "genlab/rational.hpp"

using namespace genlab;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 3) / Rational(1, 3) == Rational(1));
  CHECK((-Rational(3, 7)).num() == -3);
  CHECK_THROWS_AS(Rational(1, 0), UsageError);
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), UsageError);
  CHECK(Rational(1, 4).to_double() == 0.25);
}

TEST_CASE("rational complex division is exact") {
  const RationalComplex a{Rational(3, 2), Rational(-1, 3)};
  const RationalComplex b{Rational(2, 5), Rational(7, 4)};
  const RationalComplex q = a / b;
  CHECK(q * b == a);
  CHECK_THROWS_AS(a / RationalComplex{}, UsageError);
}

TEST_CASE("calkin-wilf order starts 1, 1/2, 2, 1/3, 3/2, 2/3, 3") {
  CHECK(calkin_wilf_rational(1) == Rational(1));
  CHECK(calkin_wilf_rational(2) == Rational(1, 2));
  CHECK(calkin_wilf_rational(3) == Rational(2));
  CHECK(calkin_wilf_rational(4) == Rational(1, 3));
  CHECK(calkin_wilf_rational(5) == Rational(3, 2));
  CHECK(calkin_wilf_rational(6) == Rational(2, 3));
  CHECK(calkin_wilf_rational(7) == Rational(3));
}

TEST_CASE("calkin-wilf round trip") {
  for (std::uint64_t rank = 1; rank <= 5000; ++rank) {
    CHECK(calkin_wilf_rank(calkin_wilf_rational(rank)) == rank);
  }
}

TEST_CASE("signed rational codec round trip") {
  CHECK(decode_rational(0) == Rational(0));
  CHECK(decode_rational(1) == Rational(1));
  CHECK(decode_rational(2) == Rational(-1));
  for (std::uint64_t code = 0; code <= 4000; ++code) {
    CHECK(encode_rational(decode_rational(code)) == code);
  }
}

TEST_CASE("cantor pairing round trip") {
  for (std::uint64_t z = 0; z <= 20000; ++z) {
    const auto [x, y] = cantor_unpair(z);
    CHECK(cantor_pair(x, y) == z);
  }
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 0) == 1);
  CHECK(cantor_pair(0, 1) == 2);
}

TEST_CASE("rational complex codec round trip") {
  for (std::uint64_t code = 0; code <= 4000; ++code) {
    CHECK(encode_rational_complex(decode_rational_complex(code)) == code);
  }
}
