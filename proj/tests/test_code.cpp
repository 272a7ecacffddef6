#include <gtest/gtest.h>

#include <set>

#include "gelp/code.hpp"
#include "gelp/error.hpp"
#include "oracles.hpp"

using gelp::BinaryPolynomial;
using gelp::CodeSpec;

TEST(Cosets, SmallExamples) {
  EXPECT_EQ(gelp::cyclotomic_coset(15, 1), (std::vector<int>{1, 2, 4, 8}));
  EXPECT_EQ(gelp::cyclotomic_coset(15, 5), (std::vector<int>{5, 10}));
  EXPECT_EQ(gelp::cyclotomic_coset(15, 0), (std::vector<int>{0}));
  EXPECT_EQ(gelp::cyclotomic_coset(23, 1), (std::vector<int>{1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12}));
  EXPECT_EQ(gelp::complete_defining_set(23, std::vector<int>{1}), (std::vector<int>{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}));
}

TEST(Cosets, CompleteSetIsIdempotentAndClosedUnderDoubling) {
  for (int n = 3; n <= 127; n += 2)
    for (int i = 0; i < n; ++i) {
      const std::vector<int> seed{i};
      const auto c = gelp::complete_defining_set(n, seed);
      const auto again = gelp::complete_defining_set(n, c);
      ASSERT_EQ(c, again) << n << ":" << i;
      const std::set<int> cs(c.begin(), c.end());
      for (int e : c) ASSERT_TRUE(cs.count((2 * e) % n)) << n << ":" << i;
      ASSERT_EQ(cs, oracle::coset(n, i)) << n << ":" << i;
    }
}

TEST(CodeSpec, ParseAndLabel) {
  const auto c = CodeSpec::parse("31:1,15");
  EXPECT_EQ(c.n(), 31);
  EXPECT_EQ(c.defining_set(), (std::vector<int>{1, 15}));
  EXPECT_EQ(c.label(), "31:1,15");
  EXPECT_EQ(c.field().m(), 5);
  EXPECT_THROW(CodeSpec::parse("31"), std::invalid_argument);
  EXPECT_THROW(CodeSpec::parse("31:x"), std::invalid_argument);
  EXPECT_THROW(CodeSpec::parse("30:1"), std::invalid_argument);
  EXPECT_THROW(CodeSpec::parse("31:31"), std::invalid_argument);
  EXPECT_THROW(CodeSpec::parse("31:"), std::invalid_argument);
}

TEST(CodeSpec, DeriveExpressesEverySyndromeOfTheCompleteSet) {
  const auto c = CodeSpec::parse("51:1,9");
  for (int e = 0; e < 51; ++e) {
    const auto d = c.derive(e);
    EXPECT_EQ(d.has_value(), c.in_complete_set(e)) << e;
    if (!d) continue;
    const int base = c.defining_set()[static_cast<std::size_t>(d->index)];
    EXPECT_EQ(gelp::mod_floor(static_cast<std::int64_t>(base) << d->frobenius, 51), e);
  }
}

TEST(CodeSpec, ColumnsMatchNaiveSyndromes) {
  const auto c = CodeSpec::parse("45:1,21");
  const auto& f = c.field();
  for (const std::vector<int>& errs : {std::vector<int>{0}, std::vector<int>{3, 17}, std::vector<int>{1, 2, 44}}) {
    const auto want = oracle::syndromes(45, {1, 21}, errs, f.m(), f.reduction_polynomial());
    EXPECT_EQ(c.syndromes_of_positions(errs), want);
  }
}

TEST(Capability, KnownCodes) {
  EXPECT_EQ(CodeSpec::parse("23:1").t(), 3);
  EXPECT_EQ(CodeSpec::parse("15:1,3,5").t(), 3);
  EXPECT_EQ(CodeSpec::parse("15:1,3").t(), 2);
  EXPECT_EQ(CodeSpec::parse("31:1,5").t(), 2);
  EXPECT_EQ(CodeSpec::parse("51:0,1,5").t(), 2);
  EXPECT_EQ(CodeSpec::parse("15:1").t(), 1);
  EXPECT_EQ(CodeSpec::parse("15:0").t(), 0);
}

TEST(Capability, ExplicitTIsVerified) {
  EXPECT_NO_THROW(CodeSpec::parse("23:1", 3));
  EXPECT_NO_THROW(CodeSpec::parse("23:1", 2));
  EXPECT_THROW(CodeSpec::parse("15:1", 2), gelp::CapabilityError);
  EXPECT_TRUE(gelp::verify_capability(CodeSpec::parse("31:1,5"), 2));
  EXPECT_FALSE(gelp::verify_capability(CodeSpec::parse("31:1,5"), 3));
}

TEST(Capability, StrictlyTwoErrorCorrecting) {
  EXPECT_TRUE(gelp::is_s2ec(CodeSpec::parse("9:1")));
  EXPECT_TRUE(gelp::is_s2ec(CodeSpec::parse("15:1,3,5")));
  EXPECT_TRUE(gelp::is_s2ec(CodeSpec::parse("51:1,5")));
  EXPECT_FALSE(gelp::is_s2ec(CodeSpec::parse("15:1")));
  EXPECT_EQ(CodeSpec::parse("9:1").t(), 1);
}

TEST(Capability, ParityExtensionMatchesStrictTwoErrorCorrection) {
  const bool t_is_two = CodeSpec::parse("51:0,1,5").t() == 2;
  EXPECT_EQ(t_is_two, gelp::is_s2ec(CodeSpec::parse("51:1,5")));
}

TEST(Patterns, CountsAndOrder) {
  EXPECT_EQ(gelp::pattern_count(51, 2), 1327u);
  EXPECT_EQ(gelp::pattern_count(55, 3), 27776u);
  EXPECT_EQ(gelp::pattern_count(23, 3), 2048u);
  EXPECT_EQ(gelp::binomial(23, 3), 1771u);
  std::vector<std::vector<int>> seen;
  gelp::for_each_pattern(4, 2, [&](std::span<const int> p) { seen.emplace_back(p.begin(), p.end()); });
  ASSERT_EQ(seen.size(), 11u);
  EXPECT_TRUE(seen[0].empty());
  EXPECT_EQ(seen[1], (std::vector<int>{0}));
  EXPECT_EQ(seen[5], (std::vector<int>{0, 1}));
  EXPECT_EQ(seen[10], (std::vector<int>{2, 3}));
}

TEST(BinaryPolynomialArith, MultiplyAndReduce) {
  const auto a = BinaryPolynomial::from_bits(std::vector<std::uint8_t>{1, 1});     // 1 + x
  const auto b = BinaryPolynomial::from_bits(std::vector<std::uint8_t>{1, 0, 1});  // 1 + x^2
  EXPECT_EQ(a * a, b);
  EXPECT_TRUE((b % a).is_zero());
  EXPECT_EQ((b + a).degree(), 2);
  EXPECT_EQ(BinaryPolynomial::monomial(70).degree(), 70);
  EXPECT_THROW(b % BinaryPolynomial{}, std::domain_error);
}

TEST(Generator, DegreesAndDivisibility) {
  for (const char* code : {"23:1", "15:1,3,5", "31:1,5", "51:0,1,5", "55:0,1", "45:1,21"}) {
    const auto c = CodeSpec::parse(code);
    const auto g = gelp::generator_polynomial(c);
    EXPECT_EQ(g.degree(), static_cast<int>(c.complete_set().size())) << code;
    auto xn1 = BinaryPolynomial::monomial(static_cast<std::size_t>(c.n()));
    xn1.set(0, true);
    EXPECT_TRUE((xn1 % g).is_zero()) << code;
  }
  EXPECT_EQ(gelp::generator_polynomial(CodeSpec::parse("23:1")).degree(), 11);
  EXPECT_EQ(gelp::generator_polynomial(CodeSpec::parse("15:1,3,5")).degree(), 10);
  EXPECT_EQ(gelp::dimension(CodeSpec::parse("23:1")), 12);
}

TEST(Encoder, CodewordsHaveZeroSyndromeAndAreCyclic) {
  auto& gen = oracle::rng();
  for (const char* code : {"23:1", "31:1,5", "51:0,1,5"}) {
    const auto c = CodeSpec::parse(code);
    const int k = gelp::dimension(c);
    for (int trial = 0; trial < 20; ++trial) {
      gelp::BitWord msg(static_cast<std::size_t>(k));
      for (auto& b : msg) b = static_cast<std::uint8_t>(gen() & 1);
      const auto word = gelp::encode(c, msg);
      ASSERT_EQ(static_cast<int>(word.size()), c.n());
      std::vector<int> ones;
      for (int i = 0; i < c.n(); ++i)
        if (word[static_cast<std::size_t>(i)]) ones.push_back(i);
      for (auto s : c.syndromes_of_positions(ones)) ASSERT_EQ(s, 0u) << code;
      std::vector<int> shifted;
      for (int i : ones) shifted.push_back((i + 1) % c.n());
      for (auto s : c.syndromes_of_positions(shifted)) ASSERT_EQ(s, 0u) << code;
    }
    EXPECT_THROW(gelp::encode(c, gelp::BitWord(static_cast<std::size_t>(k + 1))), std::invalid_argument);
  }
}

TEST(Words, ParseAndFormat) {
  const auto w = gelp::parse_word("1000010", 7);
  EXPECT_EQ(w, (gelp::BitWord{1, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(gelp::format_word(w), "1000010");
  EXPECT_EQ(gelp::parse_word("0x21", 7), w);
  EXPECT_EQ(gelp::parse_word("0X21", 7), w);
  EXPECT_THROW(gelp::parse_word("100", 7), std::invalid_argument);
  EXPECT_THROW(gelp::parse_word("10000a0", 7), std::invalid_argument);
  EXPECT_THROW(gelp::parse_word("0x80", 7), std::invalid_argument);
  EXPECT_THROW(gelp::parse_word("0xg", 7), std::invalid_argument);
}
