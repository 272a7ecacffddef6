#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gelp/code.hpp"
#include "gelp/gf2m.hpp"

namespace gelp {

enum class Op { Var, Const, Pow, Sum, Product, Quotient, Lookup };

// Finite function on key tuples; keys absent from the map evaluate to 0.
struct LookupTable {
  int arity = 0;
  std::unordered_map<std::vector<Element>, Element, ElementVectorHash> values;
  Element at(const std::vector<Element>& key) const;
};

struct Node;
using NodeRef = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Const;
  int var = -1;
  Element value = 0;
  std::uint64_t exponent = 0;
  std::vector<NodeRef> kids;
  std::shared_ptr<const LookupTable> table;
};

class Expr {
 public:
  Expr() : Expr(constant(0)) {}
  explicit Expr(NodeRef node) : node_(std::move(node)) {}

  static Expr var(int index);
  static Expr constant(Element value);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr num, Expr den);
  static Expr lookup(std::vector<Expr> keys, std::shared_ptr<const LookupTable> table);

  Expr pow(std::uint64_t k) const;

  const Node& node() const { return *node_; }
  const NodeRef& ref() const { return node_; }
  Op op() const { return node_->op; }

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }

 private:
  NodeRef node_;
};

struct Variable {
  std::string name;
  int exponent = 0;  // syndrome index in [0, n)
};

// L(X, z) = z^t + coeffs[0] z^(t-1) + ... + coeffs[t-1].
struct LocatorExpr {
  int t = 0;
  std::vector<Variable> vars;
  std::vector<Expr> coeffs;
  std::string family;

  int variable(std::string_view name) const;
};

// Distinct nodes reachable from the roots, children before parents.
std::vector<const Node*> topological_order(std::span<const Expr> roots);
std::size_t node_count(std::span<const Expr> roots);

// Rebuilds the DAG with `target` replaced; sharing of untouched nodes is kept.
Expr replace_node(const Expr& root, const Node* target, const Expr& replacement);

std::string render(const Expr& e, std::span<const Variable> vars);
std::string render(const LocatorExpr& loc);

// Flat evaluation program for a set of roots.
class Program {
 public:
  explicit Program(std::span<const Expr> roots);

  std::size_t root_count() const { return roots_.size(); }

  // Throws EvaluationFault on nonzero / 0; 0/0 evaluates to 0.
  std::vector<Element> evaluate(const Field& f, std::span<const Element> vars) const;

  struct BatchResult {
    std::vector<std::vector<Element>> roots;  // roots[k][i]
    std::vector<std::uint8_t> fault;          // fault[i] != 0 when lane i divided nonzero by zero
  };
  // columns[v][i] is variable v in lane i.
  BatchResult evaluate_batch(const Field& f, const std::vector<std::vector<Element>>& columns) const;

 private:
  struct Step {
    Op op;
    int var = -1;
    Element value = 0;
    std::uint64_t exponent = 0;
    std::vector<std::size_t> kids;
    const LookupTable* table = nullptr;
  };
  std::vector<Step> steps_;
  std::vector<std::size_t> roots_;
  std::vector<std::shared_ptr<const LookupTable>> keep_alive_;
};

// Maps each locator variable to a power of a defining-set syndrome.
class VariableBinding {
 public:
  VariableBinding(const LocatorExpr& loc, const CodeSpec& spec);
  std::vector<Element> bind(std::span<const Element> syndromes) const;
  std::vector<std::vector<Element>> bind_columns(std::span<const Element> flat_syndromes, std::size_t count) const;

 private:
  const Field* field_;
  std::size_t r_;
  std::vector<CodeSpec::Derivation> derivations_;
};

std::string locator_to_json(const LocatorExpr& loc, int indent = 2);
LocatorExpr locator_from_json(std::string_view text);

}  // namespace gelp
