#include "gelp/kernels.hpp"

namespace gelp::simd {

namespace {

Element mul_shift_reduce(const FieldParams& p, Element a, Element b) {
  const Element top = Element{1} << p.m;
  Element r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= p.poly;
  }
  return r;
}

void mul_batch_scalar(const FieldParams& p, const Element* a, const Element* b, Element* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = mul_shift_reduce(p, a[i], b[i]);
}

constexpr Kernels kScalar{"scalar", &mul_shift_reduce, &mul_batch_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

std::uint64_t barrett_constant(int m, std::uint32_t poly) {
  // quotient of x^(2m) by poly, long division over GF(2)
  std::uint64_t rem = std::uint64_t{1} << (2 * m);
  std::uint64_t q = 0;
  for (int shift = m; shift >= 0; --shift) {
    if (rem & (std::uint64_t{1} << (shift + m))) {
      q |= std::uint64_t{1} << shift;
      rem ^= static_cast<std::uint64_t>(poly) << shift;
    }
  }
  return q;
}

}  // namespace gelp::simd
