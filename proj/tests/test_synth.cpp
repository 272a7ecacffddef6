#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gelp/error.hpp"
#include "gelp/synth.hpp"
#include "oracles.hpp"

using gelp::CodeSpec;
using gelp::Element;
using gelp::Expr;

namespace {

// e_k of the error locators alpha^l, by expanding prod (1 + alpha^l z).
std::vector<Element> symmetric_of(const CodeSpec& spec, std::span<const int> positions) {
  const auto& f = spec.field();
  std::vector<Element> e{1};
  for (int l : positions) {
    const Element a = spec.alpha_pow(l);
    e.push_back(0);
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] ^= f.mul(e[k - 1], a);
  }
  return e;
}

}  // namespace

TEST(SyndromeTable, SizesAndLookup) {
  const auto golay = CodeSpec::parse("23:1");
  const auto table = gelp::build_syndrome_table(golay, 4);
  EXPECT_EQ(table.size(), 2048u);
  EXPECT_EQ(table.t(), 3);
  EXPECT_EQ(table.r(), 1);
  EXPECT_EQ(gelp::build_syndrome_table(CodeSpec::parse("15:1,3,5")).size(), 576u);
  EXPECT_EQ(gelp::build_syndrome_table(CodeSpec::parse("51:0,1,5")).size(), 1327u);
  for (std::size_t i = 0; i < table.size(); i += 37) {
    const auto pos = table.positions(i);
    const auto s = golay.syndromes_of_positions(pos);
    ASSERT_TRUE(std::equal(s.begin(), s.end(), table.syndromes(i).begin()));
    ASSERT_EQ(table.find(s), i);
  }
  EXPECT_EQ(table.weight(0), 0);
}

TEST(SyndromeTable, ParallelBuildIsIdentical) {
  const auto spec = CodeSpec::parse("31:1,5");
  const auto a = gelp::build_syndrome_table(spec, 1), b = gelp::build_syndrome_table(spec, 8);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.flat_syndromes().begin(), a.flat_syndromes().end(), b.flat_syndromes().begin()));
}

TEST(SyndromeTable, MissingSyndromeIsNotFound) {
  const auto spec = CodeSpec::parse("31:1,5");
  const auto table = gelp::build_syndrome_table(spec);
  const std::vector<int> heavy{0, 1, 2};
  EXPECT_FALSE(table.find(spec.syndromes_of_positions(heavy)).has_value());
}

TEST(ElementarySymmetric, MatchesProductExpansion) {
  for (const char* code : {"23:1", "31:1,5", "21:0,1,3,7"}) {
    const auto spec = CodeSpec::parse(code);
    const auto table = gelp::build_syndrome_table(spec);
    const auto sig = gelp::elementary_symmetric(spec, table);
    ASSERT_EQ(static_cast<int>(sig.size()), spec.t());
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto e = symmetric_of(spec, table.positions(i));
      for (int k = 1; k <= spec.t(); ++k) {
        const Element want = k < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(k)] : 0;
        ASSERT_EQ(sig[static_cast<std::size_t>(k - 1)][i], want) << code << " entry " << i;
      }
    }
  }
}

TEST(Structure, CoefficientsAreFunctionsOfTheAnchoredKey) {
  for (auto [code, sigma] : std::vector<std::pair<const char*, int>>{{"15:1", 1}, {"31:1,5", 2}, {"23:1", 2}, {"23:1", 3}}) {
    const auto spec = CodeSpec::parse(code);
    const auto table = gelp::build_syndrome_table(spec);
    const auto rep = gelp::structure_check(spec, table, sigma, static_cast<std::uint64_t>(spec.n()));
    EXPECT_TRUE(rep.ok()) << code << " sigma " << sigma;
    EXPECT_EQ(rep.skipped_zero_anchor, 1u) << code;
    EXPECT_GT(rep.classes, 0u);
  }
}

TEST(Structure, RejectsBadArguments) {
  const auto spec = CodeSpec::parse("23:1");
  const auto table = gelp::build_syndrome_table(spec);
  EXPECT_THROW(gelp::structure_check(spec, table, 2, 5), std::invalid_argument);
  EXPECT_THROW(gelp::structure_check(spec, table, 4, 23), std::invalid_argument);
  const auto odd = CodeSpec::parse("21:0,1,3,7");
  EXPECT_THROW(gelp::structure_check(odd, gelp::build_syndrome_table(odd), 1, 21), std::invalid_argument);
}

TEST(Interpolation, UnivariateRespectsTermBound) {
  for (int n : {7, 15, 17, 23, 31}) {
    const auto spec = CodeSpec::make(n, {1});
    if (spec.t() == 0) continue;
    const auto table = gelp::build_syndrome_table(spec);
    std::uint64_t total = 0;
    for (int v = 1; v <= spec.t(); ++v) total += gelp::binomial(n, v);
    for (int sigma = 1; sigma <= spec.t(); ++sigma) {
      const auto u = gelp::interpolate_univariate(spec, table, sigma);
      EXPECT_EQ(u.bound, total / static_cast<std::uint64_t>(n));
      EXPECT_LE(u.term_count, u.bound) << n << " sigma " << sigma;
    }
  }
}

TEST(Interpolation, UnivariateExpressionReproducesTheCoefficient) {
  const auto spec = CodeSpec::parse("23:1");
  const auto table = gelp::build_syndrome_table(spec);
  const auto sig = gelp::elementary_symmetric(spec, table);
  const std::vector<gelp::Variable> vars{{"x1", 1}};
  for (int sigma = 1; sigma <= 3; ++sigma) {
    const auto u = gelp::interpolate_univariate(spec, table, sigma);
    const auto ev = gelp::evaluate_on_table(spec, vars, u.expr, table);
    EXPECT_EQ(ev.values, sig[static_cast<std::size_t>(sigma - 1)]) << sigma;
  }
  EXPECT_THROW(gelp::interpolate_univariate(CodeSpec::parse("31:1,5"), gelp::build_syndrome_table(CodeSpec::parse("31:1,5")), 1),
               gelp::HypothesisError);
}

TEST(Interpolation, ZeroCompletionAgreesWithUnivariateOnPerfectCode) {
  const auto spec = CodeSpec::parse("23:1");
  const auto table = gelp::build_syndrome_table(spec);
  for (int sigma = 1; sigma <= 3; ++sigma) {
    const auto dense = gelp::interpolate_zero_completion(spec, table, sigma);
    const auto u = gelp::interpolate_univariate(spec, table, sigma);
    std::vector<Element> expect(static_cast<std::size_t>(sigma) + 23 * u.a.size(), 0);
    for (std::size_t c = 0; c < u.a.size(); ++c) expect[static_cast<std::size_t>(sigma) + 23 * c] = u.a[c];
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    EXPECT_EQ(dense, expect) << sigma;
  }
}

TEST(Interpolation, ZeroCompletionVanishesOffTheTable) {
  const auto spec = CodeSpec::parse("17:1");
  const auto table = gelp::build_syndrome_table(spec);
  const auto sig = gelp::elementary_symmetric(spec, table);
  const auto& f = spec.field();
  std::map<Element, Element> on_table;
  for (int sigma = 1; sigma <= 2; ++sigma) {
    const auto c = gelp::interpolate_zero_completion(spec, table, sigma);
    on_table.clear();
    for (std::size_t i = 0; i < table.size(); ++i) on_table[table.syndromes(i)[0]] = sig[static_cast<std::size_t>(sigma - 1)][i];
    ASSERT_LT(on_table.size(), f.size());
    for (Element x = 0; x < f.size(); ++x) {
      Element acc = 0;
      for (std::size_t j = c.size(); j-- > 0;) acc = f.mul(acc, x) ^ c[j];
      const auto it = on_table.find(x);
      ASSERT_EQ(acc, it == on_table.end() ? 0u : it->second) << sigma << " at " << x;
    }
  }
}

TEST(Synthesis, LocatorVerifiesOnAssortedCodes) {
  for (const char* code : {"23:1", "15:1", "31:1,5", "15:1,3,5", "51:0,1,5", "21:1,3,7,9", "17:1", "45:1,21"}) {
    const auto spec = CodeSpec::parse(code);
    const auto table = gelp::build_syndrome_table(spec);
    const auto loc = gelp::synthesize_locator(spec, table);
    const auto rep = gelp::verify_locator(spec, loc, table);
    EXPECT_TRUE(rep.ok()) << code << " failures " << rep.failure_count;
    EXPECT_EQ(rep.total, table.size());
  }
}

TEST(Verify, ReportsWrongLocators) {
  const auto spec = CodeSpec::parse("31:1,5");
  const auto table = gelp::build_syndrome_table(spec);
  gelp::LocatorExpr loc;
  loc.t = 2;
  loc.vars = {{"x1", 1}};
  loc.coeffs = {Expr::var(0), Expr::constant(0)};
  const auto rep = gelp::verify_locator(spec, loc, table);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.failure_count, table.size() - 1 - 31);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_EQ(rep.failures.front().positions.size(), 2u);

  loc.coeffs = {Expr::var(0), Expr::constant(1) / (Expr::var(0) + Expr::var(0))};
  const auto faulty = gelp::verify_locator(spec, loc, table);
  EXPECT_EQ(faulty.failure_count, table.size());
  EXPECT_TRUE(faulty.failures.front().fault);
}

TEST(Bordering, ConstantsAndParityIndicator) {
  const auto spec = CodeSpec::parse("51:0,1,5");
  const auto table = gelp::build_syndrome_table(spec);
  const std::vector<gelp::Variable> vars{{"x0", 0}};
  const auto one = gelp::check_bordering(spec, vars, Expr::constant(1), table);
  EXPECT_FALSE(one.bordering);
  EXPECT_TRUE(one.weakly_bordering);
  EXPECT_EQ(one.nonzero_below_two, 52u);
  const auto zero = gelp::check_bordering(spec, vars, Expr::constant(0), table);
  EXPECT_FALSE(zero.weakly_bordering);
  EXPECT_EQ(zero.zero_at_two, gelp::binomial(51, 2));
  // 1 + x0 is 1 exactly on even weight patterns
  const auto parity = gelp::check_bordering(spec, vars, Expr::constant(1) + Expr::var(0), table);
  EXPECT_FALSE(parity.bordering);
  EXPECT_TRUE(parity.weakly_bordering);
  EXPECT_EQ(parity.nonzero_below_two, 1u);
}
