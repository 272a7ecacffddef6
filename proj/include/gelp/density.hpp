#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelp/code.hpp"
#include "gelp/expr.hpp"

namespace gelp {

inline constexpr std::size_t kDefaultMonomialBudget = 1'000'000;

// Sparse multivariate polynomial over GF(2^m); exponents are kept unreduced.
class SparsePoly {
 public:
  using Monomial = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // (variable id, exponent), sorted
  using Terms = std::map<Monomial, Element>;

  SparsePoly() = default;
  static SparsePoly constant(Element c);
  static SparsePoly variable(std::uint32_t id, std::uint64_t exponent = 1);

  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Terms& terms() const { return terms_; }
  void add_term(const Monomial& mono, Element coeff);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SparsePoly& a, const SparsePoly& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

class PolyArith {
 public:
  PolyArith(const Field& f, std::size_t budget) : f_(f), budget_(budget) {}
  SparsePoly add(const SparsePoly& a, const SparsePoly& b) const;
  SparsePoly mul(const SparsePoly& a, const SparsePoly& b) const;
  SparsePoly frobenius(const SparsePoly& a, int times) const;  // a^(2^times)
  SparsePoly pow(const SparsePoly& a, std::uint64_t k) const;
  Element evaluate(const SparsePoly& p, const std::map<std::uint32_t, Element>& point) const;
  const Field& field() const { return f_; }
  std::size_t budget() const { return budget_; }

 private:
  void check(const SparsePoly& p) const;
  const Field& f_;
  std::size_t budget_;
};

// Polynomial in the locator variables (ids = variable indices); throws Error on a quotient and BudgetExceeded.
SparsePoly expand(const Expr& e, const Field& f, std::size_t budget = kDefaultMonomialBudget);
std::size_t term_count(const Expr& e, const Field& f, std::size_t budget = kDefaultMonomialBudget);

struct Fraction {
  SparsePoly num;
  SparsePoly den;
};
Fraction to_fraction(const Expr& e, const Field& f, std::size_t budget = kDefaultMonomialBudget);

// L = F(f_1/g_1, ..., f_M/g_M) with F over fresh variables 0..M-1.
struct RationalRepresentation {
  std::string name;
  SparsePoly outer;
  std::vector<SparsePoly> num;
  std::vector<SparsePoly> den;
};
std::size_t representation_density(const RationalRepresentation& rep);
RationalRepresentation trivial_representation(const SparsePoly& p);

inline constexpr std::uint32_t kZVariable = 1u << 30;

// Candidate representations of z^t + a_(t-1) z^(t-1) + ... + a_0; those exceeding the budget are omitted.
std::vector<RationalRepresentation> natural_representations(const LocatorExpr& loc, const Field& f,
                                                            std::size_t budget = kDefaultMonomialBudget);

struct CoefficientTerms {
  bool available = false;
  bool polynomial = false;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
};

struct EvalCost {
  double locator = 0;  // t * ((2^m-1)(r-1) + (2^m-1)/n)^(r/2)
  double chien = 0;    // n^2
  double total() const { return locator + chien; }
};
EvalCost eval_cost_estimate(const CodeSpec& spec);

struct DensityReport {
  std::vector<CoefficientTerms> coefficients;
  std::vector<std::pair<std::string, std::size_t>> representations;
  std::optional<std::size_t> functional_density_upper;
  std::string best_representation;
  std::optional<std::size_t> monomial_total;  // sum over coefficients of numerator + nonconstant denominator terms
  EvalCost cost;
  std::vector<std::string> notes;
};
DensityReport density_report(const CodeSpec& spec, const LocatorExpr& loc, std::size_t budget = kDefaultMonomialBudget);

struct SparsityVerdict {
  bool sparse = false;  // functional density <= n^epsilon
  double bound = 0;
  bool five_n_checked = false;
  bool within_five_n = false;  // reported, never a failure
};
SparsityVerdict sparsity_check(const CodeSpec& spec, const DensityReport& report, double epsilon = 3.0);

}  // namespace gelp
