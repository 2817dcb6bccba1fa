#include "genlab/rational.hpp"

#include <cstdlib>
#include <sstream>

namespace genlab {

Index default_truncation() {
  static const Index cached = [] {
    if (const char* env = std::getenv("GENLAB_TRUNCATION")) {
      const long long v = std::atoll(env);
      if (v >= 1) return static_cast<Index>(v);
    }
    return static_cast<Index>(100000);
  }();
  return cached;
}

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* ctx) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string("rational overflow in ") + ctx);
  }
  return static_cast<std::int64_t>(v);
}

Rational make_normalized(Wide num, Wide den, const char* ctx) {
  if (den == 0) throw UsageError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, ctx), narrow(den, ctx));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  const Rational r = make_normalized(num, den, "ctor");
  num_ = r.num_;
  den_ = r.den_;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "+");
}
Rational operator-(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_, "-");
}
Rational operator*(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_, "*");
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw UsageError("rational division by zero");
  return make_normalized(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_, "/");
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
  if (b.is_zero()) throw UsageError("rational complex division by zero");
  const Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string RationalComplex::str() const {
  std::ostringstream os;
  os << re.str();
  if (!im.is_zero()) os << (im.num() < 0 ? "-" : "+") << 'i' << '*' << Rational(std::abs(im.num()), im.den()).str();
  return os.str();
}

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  const unsigned __int128 s = static_cast<unsigned __int128>(x) + y;
  const unsigned __int128 z = s * (s + 1) / 2 + y;
  if (z > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("cantor_pair overflow");
  return static_cast<std::uint64_t>(z);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // w = floor((sqrt(8z+1)-1)/2), computed in floating point then fixed up.
  std::uint64_t w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  auto tri = [](std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * (n + 1) / 2);
  };
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  const std::uint64_t y = z - tri(w);
  return {w - y, y};
}

Rational calkin_wilf_rational(std::uint64_t rank) {
  if (rank == 0) throw UsageError("calkin_wilf_rational: rank must be >= 1");
  int msb = 63;
  while (msb > 0 && !(rank >> msb & 1u)) --msb;
  std::int64_t a = 1, b = 1;
  for (int i = msb - 1; i >= 0; --i) {
    if (rank >> i & 1u) {
      a += b;  // right child (a+b)/b
    } else {
      b += a;  // left child a/(a+b)
    }
  }
  return Rational(a, b);
}

std::uint64_t calkin_wilf_rank(const Rational& q) {
  if (q.num() <= 0) throw UsageError("calkin_wilf_rank: rational must be positive");
  std::int64_t a = q.num(), b = q.den();
  std::uint64_t bits = 0;
  int nbits = 0;
  while (!(a == 1 && b == 1)) {
    if (nbits >= 63) throw std::overflow_error("calkin_wilf_rank overflow");
    if (a > b) {
      bits |= (std::uint64_t{1} << nbits);  // was a right child
      a -= b;
    } else {
      b -= a;
    }
    ++nbits;
  }
  std::uint64_t rank = 1;
  for (int i = nbits - 1; i >= 0; --i) {
    rank = (rank << 1) | ((bits >> i) & 1u);
  }
  return rank;
}

Rational decode_rational(std::uint64_t code) {
  if (code == 0) return Rational(0);
  const Rational q = calkin_wilf_rational((code + 1) / 2);
  return (code % 2 == 1) ? q : -q;
}

std::uint64_t encode_rational(const Rational& q) {
  if (q.is_zero()) return 0;
  const std::uint64_t i = calkin_wilf_rank(q.num() > 0 ? q : -q);
  if (i > (std::numeric_limits<std::uint64_t>::max() >> 1)) throw std::overflow_error("encode_rational overflow");
  return q.num() > 0 ? 2 * i - 1 : 2 * i;
}

RationalComplex decode_rational_complex(std::uint64_t code) {
  const auto [x, y] = cantor_unpair(code);
  return {decode_rational(x), decode_rational(y)};
}

std::uint64_t encode_rational_complex(const RationalComplex& v) {
  return cantor_pair(encode_rational(v.re), encode_rational(v.im));
}

}  // namespace genlab
