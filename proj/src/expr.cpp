#include "gelp/expr.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gelp/error.hpp"

namespace gelp {

Element LookupTable::at(const std::vector<Element>& key) const {
  auto it = values.find(key);
  return it == values.end() ? 0 : it->second;
}

namespace {

NodeRef make(Node n) { return std::make_shared<const Node>(std::move(n)); }

std::vector<NodeRef> refs(std::vector<Expr>& xs) {
  std::vector<NodeRef> out;
  out.reserve(xs.size());
  for (auto& x : xs) out.push_back(x.ref());
  return out;
}

}  // namespace

Expr Expr::var(int index) {
  Node n;
  n.op = Op::Var;
  n.var = index;
  return Expr(make(std::move(n)));
}

Expr Expr::constant(Element value) {
  Node n;
  n.op = Op::Const;
  n.value = value;
  return Expr(make(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return constant(0);
  if (terms.size() == 1) return terms.front();
  Node n;
  n.op = Op::Sum;
  n.kids = refs(terms);
  return Expr(make(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return factors.front();
  Node n;
  n.op = Op::Product;
  n.kids = refs(factors);
  return Expr(make(std::move(n)));
}

Expr Expr::quotient(Expr num, Expr den) {
  Node n;
  n.op = Op::Quotient;
  n.kids = {num.ref(), den.ref()};
  return Expr(make(std::move(n)));
}

Expr Expr::lookup(std::vector<Expr> keys, std::shared_ptr<const LookupTable> table) {
  if (!table || table->arity != static_cast<int>(keys.size())) throw std::invalid_argument("lookup arity mismatch");
  Node n;
  n.op = Op::Lookup;
  n.kids = refs(keys);
  n.table = std::move(table);
  return Expr(make(std::move(n)));
}

Expr Expr::pow(std::uint64_t k) const {
  if (k == 1) return *this;
  Node n;
  n.op = Op::Pow;
  n.exponent = k;
  n.kids = {node_};
  return Expr(make(std::move(n)));
}

int LocatorExpr::variable(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<const Node*> topological_order(std::span<const Expr> roots) {
  std::vector<const Node*> order;
  std::unordered_set<const Node*> seen;
  std::vector<std::pair<const Node*, std::size_t>> stack;
  for (const Expr& r : roots) {
    if (!seen.insert(&r.node()).second) continue;
    stack.emplace_back(&r.node(), 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < node->kids.size()) {
        const Node* kid = node->kids[next++].get();
        if (seen.insert(kid).second) stack.emplace_back(kid, 0);
      } else {
        order.push_back(node);
        stack.pop_back();
      }
    }
  }
  return order;
}

std::size_t node_count(std::span<const Expr> roots) { return topological_order(roots).size(); }

Expr replace_node(const Expr& root, const Node* target, const Expr& replacement) {
  std::unordered_map<const Node*, NodeRef> memo;
  std::function<NodeRef(const NodeRef&)> go = [&](const NodeRef& n) -> NodeRef {
    if (n.get() == target) return replacement.ref();
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    bool changed = false;
    std::vector<NodeRef> kids;
    kids.reserve(n->kids.size());
    for (const auto& k : n->kids) {
      kids.push_back(go(k));
      changed = changed || kids.back() != k;
    }
    NodeRef out = n;
    if (changed) {
      Node copy = *n;
      copy.kids = std::move(kids);
      out = std::make_shared<const Node>(std::move(copy));
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return Expr(go(root.ref()));
}

// ---- rendering ----

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Sum:
      return 1;
    case Op::Product:
    case Op::Quotient:
      return 2;
    case Op::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string render_node(const Node& n, std::span<const Variable> vars, int parent_prec) {
  std::string s;
  const int prec = precedence(n.op);
  switch (n.op) {
    case Op::Var:
      s = n.var >= 0 && static_cast<std::size_t>(n.var) < vars.size() ? vars[static_cast<std::size_t>(n.var)].name
                                                                     : "v" + std::to_string(n.var);
      break;
    case Op::Const:
      s = std::to_string(n.value);
      break;
    case Op::Pow:
      s = render_node(*n.kids[0], vars, 4) + "^" + std::to_string(n.exponent);
      break;
    case Op::Sum:
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += " + ";
        s += render_node(*n.kids[i], vars, 1);
      }
      break;
    case Op::Product:
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += "*";
        s += render_node(*n.kids[i], vars, 2);
      }
      break;
    case Op::Quotient:
      s = render_node(*n.kids[0], vars, 3) + "/" + render_node(*n.kids[1], vars, 3);
      break;
    case Op::Lookup:
      s = "T" + std::to_string(n.table->values.size()) + "[";
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += ", ";
        s += render_node(*n.kids[i], vars, 0);
      }
      s += "]";
      break;
  }
  return prec < parent_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string render(const Expr& e, std::span<const Variable> vars) { return render_node(e.node(), vars, 0); }

std::string render(const LocatorExpr& loc) {
  std::string s = "z^" + std::to_string(loc.t);
  for (int k = 1; k <= loc.t; ++k) {
    s += " + (" + render(loc.coeffs[static_cast<std::size_t>(k - 1)], loc.vars) + ")";
    if (loc.t - k == 1)
      s += "*z";
    else if (loc.t - k > 1)
      s += "*z^" + std::to_string(loc.t - k);
  }
  return s;
}

// ---- Program ----

Program::Program(std::span<const Expr> roots) {
  const auto order = topological_order(roots);
  std::unordered_map<const Node*, std::size_t> slot;
  steps_.reserve(order.size());
  for (const Node* n : order) {
    Step st{n->op, n->var, n->value, n->exponent, {}, n->table.get()};
    for (const auto& k : n->kids) st.kids.push_back(slot.at(k.get()));
    if (n->table) keep_alive_.push_back(n->table);
    slot.emplace(n, steps_.size());
    steps_.push_back(std::move(st));
  }
  for (const Expr& r : roots) roots_.push_back(slot.at(&r.node()));
}

std::vector<Element> Program::evaluate(const Field& f, std::span<const Element> vars) const {
  std::vector<Element> v(steps_.size());
  std::vector<Element> key;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& st = steps_[i];
    Element out = 0;
    switch (st.op) {
      case Op::Var:
        if (st.var < 0 || static_cast<std::size_t>(st.var) >= vars.size()) throw std::out_of_range("unbound variable");
        out = vars[static_cast<std::size_t>(st.var)];
        break;
      case Op::Const:
        out = st.value;
        break;
      case Op::Pow:
        out = f.pow_u(v[st.kids[0]], st.exponent);
        break;
      case Op::Sum:
        for (auto k : st.kids) out ^= v[k];
        break;
      case Op::Product:
        out = 1;
        for (auto k : st.kids) out = f.mul(out, v[k]);
        break;
      case Op::Quotient: {
        const Element num = v[st.kids[0]], den = v[st.kids[1]];
        if (den == 0) {
          if (num != 0) throw EvaluationFault("nonzero numerator over zero denominator");
          out = 0;
        } else {
          out = f.div(num, den);
        }
        break;
      }
      case Op::Lookup:
        key.clear();
        for (auto k : st.kids) key.push_back(v[k]);
        out = st.table->at(key);
        break;
    }
    v[i] = out;
  }
  std::vector<Element> result;
  result.reserve(roots_.size());
  for (auto r : roots_) result.push_back(v[r]);
  return result;
}

namespace {

void pow_batch(const Field& f, const std::vector<Element>& base, std::uint64_t e, std::vector<Element>& out) {
  const std::size_t n = base.size();
  if (e == 0) {
    out.assign(n, 1);
    return;
  }
  e %= f.order();
  if (e == 0) e = f.order();
  std::vector<Element> sq = base, tmp(n);
  out.assign(n, 1);
  bool first = true;
  while (e) {
    if (e & 1) {
      if (first) {
        out = sq;
        first = false;
      } else {
        f.mul_batch(out, sq, tmp);
        out.swap(tmp);
      }
    }
    e >>= 1;
    if (e) {
      f.mul_batch(sq, sq, tmp);
      sq.swap(tmp);
    }
  }
}

}  // namespace

Program::BatchResult Program::evaluate_batch(const Field& f, const std::vector<std::vector<Element>>& columns) const {
  const std::size_t lanes = columns.empty() ? 0 : columns.front().size();
  std::vector<std::vector<Element>> v(steps_.size());
  std::vector<int> remaining(steps_.size(), 0);
  for (const Step& st : steps_)
    for (auto k : st.kids) ++remaining[k];
  for (auto r : roots_) ++remaining[r];

  BatchResult res;
  res.fault.assign(lanes, 0);
  std::vector<Element> tmp(lanes), key;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& st = steps_[i];
    std::vector<Element>& out = v[i];
    switch (st.op) {
      case Op::Var:
        out = columns.at(static_cast<std::size_t>(st.var));
        break;
      case Op::Const:
        out.assign(lanes, st.value);
        break;
      case Op::Pow:
        pow_batch(f, v[st.kids[0]], st.exponent, out);
        break;
      case Op::Sum:
        out = v[st.kids[0]];
        for (std::size_t j = 1; j < st.kids.size(); ++j) {
          const auto& x = v[st.kids[j]];
          for (std::size_t l = 0; l < lanes; ++l) out[l] ^= x[l];
        }
        break;
      case Op::Product:
        out = v[st.kids[0]];
        for (std::size_t j = 1; j < st.kids.size(); ++j) {
          f.mul_batch(out, v[st.kids[j]], tmp);
          out.swap(tmp);
        }
        break;
      case Op::Quotient: {
        const auto& num = v[st.kids[0]];
        const auto& den = v[st.kids[1]];
        std::vector<Element> inv;
        pow_batch(f, den, f.order() - 1, inv);
        out.resize(lanes);
        f.mul_batch(num, inv, out);
        for (std::size_t l = 0; l < lanes; ++l)
          if (den[l] == 0 && num[l] != 0) res.fault[l] = 1;
        break;
      }
      case Op::Lookup:
        out.resize(lanes);
        for (std::size_t l = 0; l < lanes; ++l) {
          key.clear();
          for (auto k : st.kids) key.push_back(v[k][l]);
          out[l] = st.table->at(key);
        }
        break;
    }
    for (auto k : st.kids)
      if (--remaining[k] == 0) std::vector<Element>().swap(v[k]);
  }
  for (auto r : roots_) res.roots.push_back(v[r]);
  return res;
}

// ---- VariableBinding ----

VariableBinding::VariableBinding(const LocatorExpr& loc, const CodeSpec& spec)
    : field_(&spec.field()), r_(static_cast<std::size_t>(spec.r())) {
  for (const Variable& var : loc.vars) {
    auto d = spec.derive(var.exponent);
    if (!d)
      throw HypothesisError("variable " + var.name + " needs the syndrome of " + std::to_string(var.exponent) +
                            ", which is not in the complete defining set of " + spec.label());
    derivations_.push_back(*d);
  }
}

std::vector<Element> VariableBinding::bind(std::span<const Element> syndromes) const {
  std::vector<Element> out;
  out.reserve(derivations_.size());
  for (const auto& d : derivations_) out.push_back(field_->frobenius(syndromes[static_cast<std::size_t>(d.index)], d.frobenius));
  return out;
}

std::vector<std::vector<Element>> VariableBinding::bind_columns(std::span<const Element> flat, std::size_t count) const {
  std::vector<std::vector<Element>> cols(derivations_.size(), std::vector<Element>(count));
  for (std::size_t v = 0; v < derivations_.size(); ++v) {
    const auto& d = derivations_[v];
    for (std::size_t i = 0; i < count; ++i)
      cols[v][i] = field_->frobenius(flat[i * r_ + static_cast<std::size_t>(d.index)], d.frobenius);
  }
  return cols;
}

}  // namespace gelp
