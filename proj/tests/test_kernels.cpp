#include <gtest/gtest.h>

#include <vector>

#include "gelp/gf2m.hpp"
#include "gelp/kernels.hpp"
#include "oracles.hpp"

using gelp::Element;
namespace simd = gelp::simd;

namespace {

simd::FieldParams params_for(int m) {
  const auto poly = gelp::primitive_polynomial(m);
  return {m, poly, simd::barrett_constant(m, poly)};
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailableAndFirst) {
  const auto ks = simd::available_kernels();
  ASSERT_FALSE(ks.empty());
  EXPECT_EQ(ks.front()->name, "scalar");
  EXPECT_EQ(simd::find_kernels("scalar"), &simd::scalar_kernels());
  EXPECT_EQ(simd::find_kernels("no-such-variant"), nullptr);
}

TEST(Kernels, BarrettConstantIsPolynomialQuotient) {
  for (int m = 2; m <= 24; ++m) {
    const std::uint32_t poly = gelp::primitive_polynomial(m);
    // long division of x^(2m) by poly over GF(2)
    unsigned __int128 rem = static_cast<unsigned __int128>(1) << (2 * m);
    std::uint64_t quot = 0;
    for (int d = 2 * m; d >= m; --d)
      if ((rem >> d) & 1) {
        rem ^= static_cast<unsigned __int128>(poly) << (d - m);
        quot |= std::uint64_t{1} << (d - m);
      }
    EXPECT_EQ(simd::barrett_constant(m, poly), quot) << "m=" << m;
  }
}

TEST(Kernels, EveryVariantMatchesNaiveProductExhaustivelyUpToDegreeEight) {
  for (const simd::Kernels* k : simd::available_kernels()) {
    for (int m = 2; m <= 8; ++m) {
      const auto p = params_for(m);
      for (Element a = 0; a < (1u << m); ++a)
        for (Element b = 0; b < (1u << m); ++b)
          ASSERT_EQ(k->mul(p, a, b), oracle::naive_mul(a, b, m, p.poly)) << k->name << " m=" << m;
    }
  }
}

TEST(Kernels, EveryVariantMatchesScalarOnRandomLargeFieldElements) {
  auto& gen = oracle::rng();
  for (const simd::Kernels* k : simd::available_kernels()) {
    for (int m = 9; m <= 24; ++m) {
      const auto p = params_for(m);
      std::uniform_int_distribution<Element> pick(0, (1u << m) - 1);
      for (int i = 0; i < 20000; ++i) {
        const Element a = pick(gen), b = pick(gen);
        ASSERT_EQ(k->mul(p, a, b), simd::scalar_kernels().mul(p, a, b)) << k->name << " m=" << m;
      }
      const Element top = (1u << m) - 1;
      EXPECT_EQ(k->mul(p, top, top), oracle::naive_mul(top, top, m, p.poly)) << k->name << " m=" << m;
    }
  }
}

TEST(Kernels, BatchVariantsMatchScalarForAllTailLengths) {
  auto& gen = oracle::rng();
  for (const simd::Kernels* k : simd::available_kernels()) {
    for (int m : {2, 5, 8, 11, 16, 20, 24}) {
      const auto p = params_for(m);
      std::uniform_int_distribution<Element> pick(0, (1u << m) - 1);
      for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 1000u}) {
        std::vector<Element> a(len), b(len), got(len, 0xdeadbeef), want(len);
        for (std::size_t i = 0; i < len; ++i) {
          a[i] = pick(gen);
          b[i] = i % 5 == 0 ? 0 : pick(gen);
        }
        simd::scalar_kernels().mul_batch(p, a.data(), b.data(), want.data(), len);
        k->mul_batch(p, a.data(), b.data(), got.data(), len);
        ASSERT_EQ(got, want) << k->name << " m=" << m << " len=" << len;
      }
    }
  }
}

TEST(Kernels, FieldWithExplicitVariantAgreesWithDefault) {
  for (const simd::Kernels* k : simd::available_kernels()) {
    const gelp::Field pinned(13, *k), dflt(13);
    std::vector<Element> a(257), b(257), x(257), y(257);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = static_cast<Element>((i * 7919) % 8192);
      b[i] = static_cast<Element>((i * 104729 + 3) % 8192);
    }
    pinned.mul_batch(a, b, x);
    dflt.mul_batch(a, b, y);
    EXPECT_EQ(x, y) << k->name;
    EXPECT_EQ(pinned.inv(1234), dflt.inv(1234)) << k->name;
  }
}
