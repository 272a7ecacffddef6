#include <immintrin.h>

#include "gelp/kernels.hpp"

namespace gelp::simd::detail {

Element mul_clmul(const FieldParams& p, Element a, Element b) {
  const __m128i prod = _mm_clmulepi64_si128(_mm_cvtsi32_si128(static_cast<int>(a)),
                                            _mm_cvtsi32_si128(static_cast<int>(b)), 0x00);
  const auto c = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
  const __m128i t1 = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(c >> p.m)),
                                          _mm_cvtsi64_si128(static_cast<long long>(p.barrett)), 0x00);
  const auto q = static_cast<std::uint64_t>(_mm_cvtsi128_si64(t1)) >> p.m;
  const __m128i t2 = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(q)),
                                          _mm_cvtsi32_si128(static_cast<int>(p.poly)), 0x00);
  const auto r = c ^ static_cast<std::uint64_t>(_mm_cvtsi128_si64(t2));
  return static_cast<Element>(r & ((std::uint64_t{1} << p.m) - 1));
}

void mul_batch_clmul(const FieldParams& p, const Element* a, const Element* b, Element* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = mul_clmul(p, a[i], b[i]);
}

// Eight lanes of shift-and-reduce per step.
void mul_batch_avx2(const FieldParams& p, const Element* a, const Element* b, Element* out, std::size_t n) {
  const __m256i poly = _mm256_set1_epi32(static_cast<int>(p.poly));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();
  const __m128i top_shift = _mm_cvtsi32_si128(p.m);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i acc = zero;
    for (int bit = 0; bit < p.m; ++bit) {
      const __m256i take = _mm256_cmpeq_epi32(_mm256_and_si256(y, one), one);
      acc = _mm256_xor_si256(acc, _mm256_and_si256(x, take));
      y = _mm256_srli_epi32(y, 1);
      x = _mm256_slli_epi32(x, 1);
      const __m256i over = _mm256_cmpeq_epi32(_mm256_and_si256(_mm256_srl_epi32(x, top_shift), one), one);
      x = _mm256_xor_si256(x, _mm256_and_si256(poly, over));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) out[i] = mul_clmul(p, a[i], b[i]);
}

}  // namespace gelp::simd::detail
