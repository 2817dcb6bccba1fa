#include "genlab/enumeration.hpp"

namespace genlab {

RationalSeq enumerate_rational(std::uint64_t j) {
  if (j == 0) throw UsageError("enumerate_rational: index must be >= 1");
  RationalSeq out;
  if (j == 1) return out;

  const auto [len_code, entry_code] = cantor_unpair(j - 2);
  const std::uint64_t length = len_code + 1;
  out.entries.resize(length);
  std::uint64_t rest = entry_code;
  for (std::uint64_t i = 0; i + 1 < length; ++i) {
    const auto [head, tail] = cantor_unpair(rest);
    out.entries[i] = decode_rational_complex(head);
    rest = tail;
  }
  out.entries[length - 1] = decode_rational_complex(rest + 1);
  return out;
}

std::uint64_t index_of_seq(const RationalSeq& seq) {
  std::vector<RationalComplex> entries = seq.entries;
  while (!entries.empty() && entries.back().is_zero()) entries.pop_back();
  if (entries.empty()) return 1;

  const std::uint64_t length = entries.size();
  std::uint64_t code = encode_rational_complex(entries.back());
  if (code == 0) throw std::logic_error("index_of_seq: nonzero entry coded as zero");
  code -= 1;
  for (std::uint64_t i = length - 1; i-- > 0;) {
    code = cantor_pair(encode_rational_complex(entries[i]), code);
  }
  return cantor_pair(length - 1, code) + 2;
}

ComplexSeq enumerate_dense(std::uint64_t j) {
  return ComplexSeq::finite_support_exact(enumerate_rational(j).entries);
}

std::vector<RationalComplex> enumerate_polynomial(std::uint64_t j) {
  return enumerate_rational(j).entries;
}

}  // namespace genlab
