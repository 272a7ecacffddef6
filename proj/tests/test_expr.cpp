#include <gtest/gtest.h>

#include <functional>

#include "gelp/catalog.hpp"
#include "gelp/error.hpp"
#include "gelp/expr.hpp"
#include "oracles.hpp"

using gelp::Element;
using gelp::Expr;
using gelp::Field;
using gelp::LocatorExpr;
using gelp::Program;

namespace {

// Random DAG over `vars` variables; quotients and lookups included, nodes shared.
Expr random_expr(std::mt19937_64& gen, int vars, int depth, const Field& f) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 6);
  switch (kind(gen)) {
    case 0:
      return Expr::var(static_cast<int>(gen() % static_cast<unsigned>(vars)));
    case 1:
      return Expr::constant(static_cast<Element>(gen() % f.size()));
    case 2:
      return random_expr(gen, vars, depth - 1, f).pow(gen() % 300 + 2);
    case 3: {
      const Expr a = random_expr(gen, vars, depth - 1, f);
      return a + random_expr(gen, vars, depth - 1, f) + a * a;
    }
    case 4:
      return random_expr(gen, vars, depth - 1, f) * random_expr(gen, vars, depth - 1, f);
    case 5:
      return random_expr(gen, vars, depth - 1, f) / random_expr(gen, vars, depth - 1, f);
    default: {
      auto table = std::make_shared<gelp::LookupTable>();
      table->arity = 1;
      for (int i = 0; i < 8; ++i) table->values[{static_cast<Element>(gen() % f.size())}] = static_cast<Element>(gen() % f.size());
      return Expr::lookup({random_expr(gen, vars, depth - 1, f)}, table);
    }
  }
}

// Direct recursive evaluation; nullopt on a fault.
std::optional<Element> reference_eval(const gelp::Node& n, const Field& f, const std::vector<Element>& x) {
  using gelp::Op;
  switch (n.op) {
    case Op::Var:
      return x[static_cast<std::size_t>(n.var)];
    case Op::Const:
      return n.value;
    case Op::Pow: {
      auto b = reference_eval(*n.kids[0], f, x);
      if (!b) return std::nullopt;
      return f.pow_u(*b, n.exponent);
    }
    case Op::Sum: {
      Element acc = 0;
      for (const auto& k : n.kids) {
        auto v = reference_eval(*k, f, x);
        if (!v) return std::nullopt;
        acc ^= *v;
      }
      return acc;
    }
    case Op::Product: {
      Element acc = 1;
      for (const auto& k : n.kids) {
        auto v = reference_eval(*k, f, x);
        if (!v) return std::nullopt;
        acc = f.mul(acc, *v);
      }
      return acc;
    }
    case Op::Quotient: {
      auto a = reference_eval(*n.kids[0], f, x), b = reference_eval(*n.kids[1], f, x);
      if (!a || !b) return std::nullopt;
      if (*b == 0) {
        if (*a == 0) return Element{0};
        return std::nullopt;
      }
      return f.div(*a, *b);
    }
    case Op::Lookup: {
      std::vector<Element> key;
      for (const auto& k : n.kids) {
        auto v = reference_eval(*k, f, x);
        if (!v) return std::nullopt;
        key.push_back(*v);
      }
      return n.table->at(key);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Expr, QuotientConvention) {
  const Field f(5);
  const Expr q = Expr::var(0) / Expr::var(1);
  const Program p(std::vector<Expr>{q});
  EXPECT_EQ(p.evaluate(f, std::vector<Element>{0, 0})[0], 0u);
  EXPECT_EQ(p.evaluate(f, std::vector<Element>{6, 3})[0], f.div(6, 3));
  EXPECT_THROW(p.evaluate(f, std::vector<Element>{6, 0}), gelp::EvaluationFault);
  EXPECT_THROW(p.evaluate(f, std::vector<Element>{6}), std::out_of_range);
}

TEST(Expr, LookupMissingKeyIsZero) {
  const Field f(4);
  auto table = std::make_shared<gelp::LookupTable>();
  table->arity = 2;
  table->values[{1, 2}] = 9;
  const Expr e = Expr::lookup({Expr::var(0), Expr::var(1)}, table);
  const Program p(std::vector<Expr>{e});
  EXPECT_EQ(p.evaluate(f, std::vector<Element>{1, 2})[0], 9u);
  EXPECT_EQ(p.evaluate(f, std::vector<Element>{2, 1})[0], 0u);
  EXPECT_THROW(Expr::lookup({Expr::var(0)}, table), std::invalid_argument);
}

TEST(Expr, PowerOfZeroAndLargeExponents) {
  const Field f(11);
  const Program p(std::vector<Expr>{Expr::var(0).pow(0), Expr::var(0).pow(1365), Expr::var(0).pow(std::uint64_t{1} << 50)});
  const auto zero = p.evaluate(f, std::vector<Element>{0});
  EXPECT_EQ(zero[0], 1u);
  EXPECT_EQ(zero[1], 0u);
  const auto v = p.evaluate(f, std::vector<Element>{77});
  EXPECT_EQ(v[1], f.pow_u(77, 1365));
  EXPECT_EQ(v[2], f.frobenius(77, 50 % 11));
}

TEST(Expr, ProgramMatchesRecursiveReferenceOnRandomDags) {
  auto& gen = oracle::rng();
  const Field f(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Expr e = random_expr(gen, 3, 4, f);
    const Program p(std::vector<Expr>{e});
    for (int point = 0; point < 20; ++point) {
      std::vector<Element> x{static_cast<Element>(gen() % f.size()), static_cast<Element>(gen() % f.size()),
                             point % 4 == 0 ? 0u : static_cast<Element>(gen() % f.size())};
      const auto want = reference_eval(e.node(), f, x);
      if (want) {
        ASSERT_EQ(p.evaluate(f, x)[0], *want);
      } else {
        ASSERT_THROW(p.evaluate(f, x), gelp::EvaluationFault);
      }
    }
  }
}

TEST(Expr, BatchEvaluationMatchesScalarIncludingFaultLanes) {
  auto& gen = oracle::rng();
  for (int m : {4, 8, 13}) {
    const Field f(m);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Expr> roots{random_expr(gen, 3, 4, f), random_expr(gen, 3, 3, f)};
      const Program p(roots);
      const std::size_t lanes = 1 + gen() % 70;
      std::vector<std::vector<Element>> cols(3, std::vector<Element>(lanes));
      for (auto& c : cols)
        for (auto& v : c) v = gen() % 3 == 0 ? 0 : static_cast<Element>(gen() % f.size());
      const auto batch = p.evaluate_batch(f, cols);
      for (std::size_t i = 0; i < lanes; ++i) {
        std::vector<Element> x{cols[0][i], cols[1][i], cols[2][i]};
        try {
          const auto v = p.evaluate(f, x);
          ASSERT_EQ(batch.fault[i], 0) << "lane " << i;
          ASSERT_EQ(batch.roots[0][i], v[0]);
          ASSERT_EQ(batch.roots[1][i], v[1]);
        } catch (const gelp::EvaluationFault&) {
          ASSERT_NE(batch.fault[i], 0) << "lane " << i;
        }
      }
    }
  }
}

TEST(Expr, TopologicalOrderVisitsSharedNodesOnce) {
  const Expr x = Expr::var(0);
  const Expr shared = x * x;
  const Expr root = shared + shared.pow(3);
  const auto order = gelp::topological_order(std::vector<Expr>{root});
  EXPECT_EQ(order.size(), 4u);
  EXPECT_EQ(order.back(), &root.node());
  EXPECT_EQ(gelp::node_count(std::vector<Expr>{root, shared}), 4u);
}

TEST(Expr, ReplaceNodeRebuildsOnlyTheAffectedPath) {
  const Field f(5);
  const Expr x = Expr::var(0), y = Expr::var(1);
  const Expr left = x * y;
  const Expr root = left + y.pow(2);
  const Expr mutated = gelp::replace_node(root, &y.node(), Expr::constant(1));
  const Program p(std::vector<Expr>{root}), q(std::vector<Expr>{mutated});
  const std::vector<Element> at{3, 7};
  EXPECT_EQ(p.evaluate(f, at)[0], f.mul(3, 7) ^ f.mul(7, 7));
  EXPECT_EQ(q.evaluate(f, at)[0], 3u ^ 1u);
  EXPECT_EQ(p.evaluate(f, at)[0], f.mul(3, 7) ^ f.mul(7, 7));
}

TEST(Expr, RenderIsReadable) {
  const std::vector<gelp::Variable> vars{{"x1", 1}, {"x3", 3}};
  const Expr e = (Expr::var(0).pow(3) + Expr::var(1)) / Expr::var(0);
  EXPECT_EQ(gelp::render(e, vars), "(x1^3 + x3)/x1");
}

TEST(Json, RoundTripPreservesEvaluationForCatalogLocators) {
  auto& gen = oracle::rng();
  for (const char* code : {"31:1,15", "51:0,1,5", "23:1", "21:0,1,3,7", "31:0,1,7,15", "15:1"}) {
    const auto spec = gelp::CodeSpec::parse(code);
    const auto table = gelp::build_syndrome_table(spec);
    const auto built = gelp::build_locator(spec, table);
    const std::string text = gelp::locator_to_json(built.locator);
    const LocatorExpr back = gelp::locator_from_json(text);
    EXPECT_EQ(gelp::locator_to_json(back), text) << code;
    EXPECT_EQ(back.t, built.locator.t);
    ASSERT_EQ(back.vars.size(), built.locator.vars.size());
    const Program p(built.locator.coeffs), q(back.coeffs);
    for (int i = 0; i < 50; ++i) {
      std::vector<Element> x(back.vars.size());
      for (auto& v : x) v = static_cast<Element>(gen() % spec.field().size());
      std::optional<std::vector<Element>> a, b;
      try {
        a = p.evaluate(spec.field(), x);
      } catch (const gelp::EvaluationFault&) {
      }
      try {
        b = q.evaluate(spec.field(), x);
      } catch (const gelp::EvaluationFault&) {
      }
      ASSERT_EQ(a, b) << code;
    }
  }
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_ANY_THROW(gelp::locator_from_json("{"));
  EXPECT_ANY_THROW(gelp::locator_from_json(R"({"t": 2, "vars": {"x1": 1}, "coeffs": [{"var": "x9"}, {"const": 0}]})"));
  EXPECT_ANY_THROW(gelp::locator_from_json(R"({"t": 2, "vars": {"x1": 1}, "coeffs": [{"var": "x1"}]})"));
}

TEST(Binding, VariablesFollowFrobeniusOfPrimarySyndromes) {
  const auto spec = gelp::CodeSpec::parse("31:1,5");
  LocatorExpr loc;
  loc.t = 2;
  loc.vars = {{"x1", 1}, {"x2", 2}, {"x10", 10}, {"x20", 20}};
  loc.coeffs = {Expr::var(0), Expr::var(1)};
  const gelp::VariableBinding bind(loc, spec);
  const std::vector<int> errs{3, 11};
  const auto s = spec.syndromes_of_positions(errs);
  const auto vals = bind.bind(s);
  const auto& f = spec.field();
  const auto& fp = f;
  EXPECT_EQ(vals[0], s[0]);
  EXPECT_EQ(vals[1], fp.sqr(s[0]));
  EXPECT_EQ(vals[2], fp.sqr(s[1]));
  EXPECT_EQ(vals[3], fp.frobenius(s[1], 2));
  loc.vars.push_back({"x3", 3});
  EXPECT_THROW(gelp::VariableBinding(loc, spec), gelp::HypothesisError);
}
