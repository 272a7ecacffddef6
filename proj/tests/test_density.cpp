#include <gtest/gtest.h>

#include <cmath>

#include "gelp/catalog.hpp"
#include "gelp/density.hpp"
#include "gelp/error.hpp"
#include "oracles.hpp"

using gelp::CodeSpec;
using gelp::Element;
using gelp::Expr;
using gelp::Field;
using gelp::SparsePoly;

namespace {

std::size_t trivial_density(const Expr& e, const Field& f) {
  return gelp::representation_density(gelp::trivial_representation(gelp::expand(e, f)));
}

// Polynomial-only random DAG (sums, products, powers, constants, variables).
Expr random_poly(std::mt19937_64& gen, int vars, int depth, const Field& f) {
  const int kind = depth <= 0 ? static_cast<int>(gen() % 2) : static_cast<int>(gen() % 5);
  switch (kind) {
    case 0:
      return Expr::var(static_cast<int>(gen() % static_cast<unsigned>(vars)));
    case 1:
      return Expr::constant(static_cast<Element>(gen() % f.size()));
    case 2:
      return random_poly(gen, vars, depth - 1, f).pow(gen() % 9 + 2);
    case 3:
      return random_poly(gen, vars, depth - 1, f) + random_poly(gen, vars, depth - 1, f);
    default:
      return random_poly(gen, vars, depth - 1, f) * random_poly(gen, vars, depth - 1, f);
  }
}

}  // namespace

TEST(Density, SmallPolynomials) {
  const Field f(5);
  const Expr x1 = Expr::var(0), x2 = Expr::var(1);
  EXPECT_EQ(trivial_density(x1 + x2, f), 2u);
  EXPECT_EQ(trivial_density(x1.pow(2), f), 1u);
  EXPECT_EQ(trivial_density((x1 + x2).pow(2), f), 2u);
  EXPECT_EQ(trivial_density((x1 + x2).pow(3), f), 4u);
  EXPECT_EQ(trivial_density(x1 + x1, f), 0u);
}

TEST(Density, TrivialRepresentationCountsTerms) {
  auto& gen = oracle::rng();
  const Field f(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gelp::expand(random_poly(gen, 3, 4, f), f);
    EXPECT_EQ(gelp::representation_density(gelp::trivial_representation(p)), p.size());
  }
}

TEST(Density, SingleAtomOuterFunction) {
  gelp::RationalRepresentation rep;
  rep.outer = SparsePoly::variable(0);
  rep.num = {SparsePoly::variable(7)};
  rep.den = {SparsePoly::constant(1)};
  EXPECT_EQ(gelp::representation_density(rep), 1u);
  rep.den = {SparsePoly::variable(8)};
  EXPECT_EQ(gelp::representation_density(rep), 2u);
}

TEST(Density, ExpansionAgreesWithEvaluation) {
  auto& gen = oracle::rng();
  const Field f(7);
  const gelp::PolyArith ar(f, gelp::kDefaultMonomialBudget);
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e = random_poly(gen, 3, 4, f);
    const auto p = gelp::expand(e, f);
    const gelp::Program prog(std::vector<Expr>{e});
    for (int point = 0; point < 10; ++point) {
      std::vector<Element> x{static_cast<Element>(gen() % f.size()), static_cast<Element>(gen() % f.size()),
                             static_cast<Element>(gen() % f.size())};
      const std::map<std::uint32_t, Element> at{{0, x[0]}, {1, x[1]}, {2, x[2]}};
      ASSERT_EQ(ar.evaluate(p, at), prog.evaluate(f, x)[0]);
    }
  }
}

TEST(Density, FractionAgreesWithEvaluation) {
  auto& gen = oracle::rng();
  const Field f(6);
  const gelp::PolyArith ar(f, gelp::kDefaultMonomialBudget);
  for (int trial = 0; trial < 100; ++trial) {
    const Expr e = random_poly(gen, 2, 3, f) / random_poly(gen, 2, 3, f) + random_poly(gen, 2, 2, f);
    gelp::Fraction fr;
    try {
      fr = gelp::to_fraction(e, f);
    } catch (const gelp::Error&) {
      continue;  // denominator expanded to the zero polynomial
    }
    const gelp::Program prog(std::vector<Expr>{e});
    for (int point = 0; point < 10; ++point) {
      std::vector<Element> x{static_cast<Element>(gen() % f.size()), static_cast<Element>(gen() % f.size())};
      const std::map<std::uint32_t, Element> at{{0, x[0]}, {1, x[1]}};
      const Element den = ar.evaluate(fr.den, at);
      if (den == 0) continue;
      try {
        ASSERT_EQ(f.div(ar.evaluate(fr.num, at), den), prog.evaluate(f, x)[0]);
      } catch (const gelp::EvaluationFault&) {
      }
    }
  }
  EXPECT_THROW(gelp::expand(Expr::var(0) / Expr::var(1), f), gelp::Error);
}

TEST(Density, LookupInterpolationIsExactOnTheKeys) {
  const Field f(4);
  auto table = std::make_shared<gelp::LookupTable>();
  table->arity = 2;
  table->values[{1, 2}] = 5;
  table->values[{3, 2}] = 7;
  table->values[{1, 9}] = 11;
  const Expr e = Expr::lookup({Expr::var(0), Expr::var(1)}, table);
  const auto p = gelp::expand(e, f);
  const gelp::PolyArith ar(f, gelp::kDefaultMonomialBudget);
  for (const auto& [key, value] : table->values) EXPECT_EQ(ar.evaluate(p, {{0, key[0]}, {1, key[1]}}), value);
  EXPECT_LE(p.size(), table->values.size());
}

TEST(Density, BudgetIsEnforced) {
  const Field f(8);
  const Expr s = Expr::sum({Expr::var(0), Expr::var(1), Expr::var(2), Expr::var(3), Expr::constant(1)});
  EXPECT_THROW(gelp::expand(s.pow(255), f, 100), gelp::BudgetExceeded);
}

TEST(Density, WorkedDoubleErrorRepresentation) {
  const auto spec = CodeSpec::parse("31:1,5");
  const auto loc = gelp::t2_sl(spec, 1, 10);
  const auto rep = gelp::density_report(spec, loc);
  ASSERT_TRUE(rep.functional_density_upper.has_value());
  EXPECT_EQ(*rep.functional_density_upper, 5u);
  EXPECT_LE(*rep.functional_density_upper, 6u);
  EXPECT_EQ(rep.best_representation, "quotient-atoms");
  const auto verdict = gelp::sparsity_check(spec, rep);
  EXPECT_TRUE(verdict.sparse);
  EXPECT_FALSE(verdict.five_n_checked);
}

TEST(Density, EvaluationCostEstimates) {
  const auto golay = gelp::eval_cost_estimate(CodeSpec::parse("23:1"));
  EXPECT_NEAR(golay.locator, 3 * std::sqrt(89.0), 1e-9);
  EXPECT_NEAR(golay.locator, 28.3, 0.05);
  EXPECT_EQ(golay.chien, 529.0);
  const auto bch = gelp::eval_cost_estimate(CodeSpec::parse("15:1,3,5"));
  EXPECT_NEAR(bch.locator, 517.8, 0.05);
  EXPECT_EQ(bch.chien, 225.0);
  EXPECT_NEAR(bch.total(), 742.8, 0.05);
}

TEST(Density, FiftyFiveEntryExceedsFiveNAndIsOnlyFlagged) {
  const auto spec = CodeSpec::parse("55:0,1");
  const auto rep = gelp::density_report(spec, gelp::load_table_entry(spec));
  ASSERT_TRUE(rep.monomial_total.has_value());
  EXPECT_EQ(*rep.monomial_total, 549u);
  const auto verdict = gelp::sparsity_check(spec, rep);
  EXPECT_TRUE(verdict.five_n_checked);
  EXPECT_FALSE(verdict.within_five_n);
  EXPECT_TRUE(verdict.sparse);
}

TEST(Density, ClosedFormCatalogLocatorsAreSparse) {
  for (const char* code : {"31:1,15", "51:0,1,5", "23:1", "15:1,3,5", "21:1,3,7,9"}) {
    const auto spec = CodeSpec::parse(code);
    const auto built = gelp::build_locator(spec, gelp::build_syndrome_table(spec));
    const auto rep = gelp::density_report(spec, built.locator);
    ASSERT_TRUE(rep.functional_density_upper.has_value()) << code;
    EXPECT_TRUE(gelp::sparsity_check(spec, rep).sparse) << code << " " << *rep.functional_density_upper;
  }
}

TEST(Density, ExpandedSynthesizedLocatorMatchesTheTable) {
  for (const char* code : {"51:1,3,9", "31:1,5", "21:0,1,3,7"}) {
    const auto spec = CodeSpec::parse(code);
    const auto table = gelp::build_syndrome_table(spec);
    const auto loc = gelp::synthesize_locator(spec, table);
    const auto sig = gelp::elementary_symmetric(spec, table);
    const gelp::VariableBinding bind(loc, spec);
    const gelp::PolyArith ar(spec.field(), gelp::kDefaultMonomialBudget);
    for (int k = 0; k < spec.t(); ++k) {
      const auto p = gelp::expand(loc.coeffs[static_cast<std::size_t>(k)], spec.field());
      EXPECT_LE(p.size(), table.size()) << code;
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto x = bind.bind(table.syndromes(i));
        std::map<std::uint32_t, Element> at;
        for (std::size_t v = 0; v < x.size(); ++v) at[static_cast<std::uint32_t>(v)] = x[v];
        ASSERT_EQ(ar.evaluate(p, at), sig[static_cast<std::size_t>(k)][i]) << code << " coefficient " << k + 1 << " entry " << i;
      }
    }
  }
}
