#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gelp/code.hpp"
#include "gelp/expr.hpp"

namespace gelp {

inline constexpr std::uint64_t kMaxTableEntries = 1'000'000;

// Every pattern of weight <= t with its syndrome vector, ordered by weight then lexicographically.
class SyndromeTable {
 public:
  std::size_t size() const { return weights_.size(); }
  int n() const { return n_; }
  int t() const { return t_; }
  int r() const { return r_; }
  std::span<const Element> syndromes(std::size_t i) const { return {flat_.data() + i * r_, static_cast<std::size_t>(r_)}; }
  std::span<const Element> flat_syndromes() const { return flat_; }
  int weight(std::size_t i) const { return weights_[i]; }
  std::span<const int> positions(std::size_t i) const {
    return {positions_.data() + i * static_cast<std::size_t>(t_), static_cast<std::size_t>(weights_[i])};
  }
  std::optional<std::size_t> find(std::span<const Element> s) const;

  friend SyndromeTable build_syndrome_table(const CodeSpec& spec, unsigned jobs);

 private:
  int n_ = 0, t_ = 0, r_ = 0;
  std::vector<Element> flat_;
  std::vector<int> weights_;
  std::vector<int> positions_;
  std::unordered_map<std::vector<Element>, std::size_t, ElementVectorHash> index_;
};

// Throws CapabilityError on a collision and BudgetExceeded above kMaxTableEntries.
SyndromeTable build_syndrome_table(const CodeSpec& spec, unsigned jobs = 1);

// sigma[k-1][i]: k-th elementary symmetric function of the error locations of entry i.
std::vector<std::vector<Element>> elementary_symmetric(const CodeSpec& spec, const SyndromeTable& table);

struct VerifyFailure {
  std::size_t entry = 0;
  std::vector<int> positions;
  bool fault = false;
  std::vector<Element> expected;
  std::vector<Element> got;
};

struct VerifyReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failure_count = 0;
  std::vector<VerifyFailure> failures;  // first few only
  bool ok() const { return failure_count == 0 && total > 0; }
};

VerifyReport verify_locator(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table);

// Per-entry values of an expression over a locator's variables; faults reported in `fault`.
struct ExprValues {
  std::vector<Element> values;
  std::vector<std::uint8_t> fault;
};
ExprValues evaluate_on_table(const CodeSpec& spec, std::span<const Variable> vars, const Expr& e, const SyndromeTable& table);

struct BorderingReport {
  bool bordering = false;
  bool weakly_bordering = false;
  std::size_t nonzero_below_two = 0;  // entries of weight 0 or 1 with h != 0
  std::size_t not_one_at_two = 0;
  std::size_t zero_at_two = 0;
  std::size_t faults = 0;
};
BorderingReport check_bordering(const CodeSpec& spec, std::span<const Variable> vars, const Expr& h,
                                const SyndromeTable& table);

struct StructureReport {
  int sigma = 0;
  std::uint64_t lambda = 0;
  std::size_t classes = 0;
  std::size_t largest_class = 0;
  std::size_t smallest_class = 0;
  std::size_t skipped_zero_anchor = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;
  bool ok() const { return violations == 0; }
};
// Classes keyed by (s1^lambda, s_j / s1^i_j); sigma / s1^(sigma/i1) must be constant on each class.
StructureReport structure_check(const CodeSpec& spec, const SyndromeTable& table, int sigma, std::uint64_t lambda);

struct UnivariateInterpolation {
  int sigma = 0;
  int n = 0;
  std::vector<Element> a;  // coefficient b = x1^sigma * sum a[c] * (x1^n)^c
  std::size_t term_count = 0;
  std::uint64_t bound = 0;  // floor(sum_{v=1..t} C(n, v) / n)
  Expr expr;                // over variable 0 = syndrome of 1
};
// Needs a single defining-set entry in the coset of 1.
UnivariateInterpolation interpolate_univariate(const CodeSpec& spec, const SyndromeTable& table, int sigma);

// Dense polynomial of degree < 2^m equal to sigma on correctable x1 values and 0 elsewhere (m <= 16).
std::vector<Element> interpolate_zero_completion(const CodeSpec& spec, const SyndromeTable& table, int sigma);

// Lookup-backed function equal to `values` on the table, in the anchored form
// x1^degree * A(x1^n, s_j * x1^-i_j) + (1 + x1^(2^m-1)) * B(s_j); variables are appended to `vars`.
Expr synthesize_function(const CodeSpec& spec, const SyndromeTable& table, std::span<const Element> values, int degree,
                         std::vector<Variable>& vars);

// Total locator from the table alone.
LocatorExpr synthesize_locator(const CodeSpec& spec, const SyndromeTable& table);

}  // namespace gelp
