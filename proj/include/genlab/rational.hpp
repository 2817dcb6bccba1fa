#ifndef GENLAB_RATIONAL_HPP_
#define GENLAB_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

#include "genlab/common.hpp"

namespace genlab {

/// Exact rational with a normalized (gcd = 1, den > 0) int64 representation.
/// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
/// if a normalized result leaves the int64 range.  Enumeration inputs stay in
/// this type; metric evaluation converts to double.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);  // throws UsageError if den == 0
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of Q + iQ.
struct RationalComplex {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex to_complex() const { return {re.to_double(), im.to_double()}; }

  RationalComplex operator-() const { return {-re, -im}; }
  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b);
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) = default;

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Integer codecs used by the deterministic enumerations (scheme version 1).
// ---------------------------------------------------------------------------

/// Cantor pairing N0 x N0 <-> N0:  pair(x, y) = (x+y)(x+y+1)/2 + y.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);  // throws on overflow
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

/// Calkin-Wilf codec for the positive rationals: rank 1 is 1/1, the children
/// of the node with rank i are ranked 2i (left, a/(a+b)) and 2i+1 (right,
/// (a+b)/b).  Bijective, exact in both directions.
Rational calkin_wilf_rational(std::uint64_t rank);           // rank >= 1
std::uint64_t calkin_wilf_rank(const Rational& q);           // q > 0, throws on overflow

/// Full-Q codec: 0 <-> 0, 2i-1 <-> +q_i, 2i <-> -q_i.
Rational decode_rational(std::uint64_t code);
std::uint64_t encode_rational(const Rational& q);

/// Q+iQ codec: cantor_pair(code(re), code(im)).
RationalComplex decode_rational_complex(std::uint64_t code);
std::uint64_t encode_rational_complex(const RationalComplex& v);

}  // namespace genlab

#endif  // GENLAB_RATIONAL_HPP_
