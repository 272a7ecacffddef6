#include "gelp/synth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gelp/error.hpp"
#include "gelp/parallel.hpp"

namespace gelp {

// ---- table ----

std::optional<std::size_t> SyndromeTable::find(std::span<const Element> s) const {
  auto it = index_.find(std::vector<Element>(s.begin(), s.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SyndromeTable build_syndrome_table(const CodeSpec& spec, unsigned jobs) {
  const int t = spec.t();
  const std::uint64_t count = pattern_count(spec.n(), t);
  if (count > kMaxTableEntries)
    throw BudgetExceeded(spec.label() + " with t=" + std::to_string(t) + " needs " + std::to_string(count) +
                         " table entries, above the limit");
  SyndromeTable tab;
  tab.n_ = spec.n();
  tab.t_ = t;
  tab.r_ = spec.r();
  tab.weights_.reserve(count);
  tab.positions_.assign(count * static_cast<std::size_t>(t), -1);
  std::size_t idx = 0;
  for_each_pattern(spec.n(), t, [&](std::span<const int> pos) {
    tab.weights_.push_back(static_cast<int>(pos.size()));
    std::copy(pos.begin(), pos.end(), tab.positions_.begin() + static_cast<std::ptrdiff_t>(idx * static_cast<std::size_t>(t)));
    ++idx;
  });
  const auto r = static_cast<std::size_t>(tab.r_);
  tab.flat_.assign(count * r, 0);
  parallel_chunks(count, jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto s = spec.syndromes_of_positions(tab.positions(i));
      std::copy(s.begin(), s.end(), tab.flat_.begin() + static_cast<std::ptrdiff_t>(i * r));
    }
  });
  tab.index_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto s = tab.syndromes(i);
    if (!tab.index_.emplace(std::vector<Element>(s.begin(), s.end()), i).second)
      throw CapabilityError("syndrome collision in " + spec.label() + " at weight " + std::to_string(tab.weights_[i]));
  }
  return tab;
}

std::vector<std::vector<Element>> elementary_symmetric(const CodeSpec& spec, const SyndromeTable& table) {
  const Field& f = spec.field();
  const auto t = static_cast<std::size_t>(table.t());
  std::vector<std::vector<Element>> sigma(t, std::vector<Element>(table.size(), 0));
  std::vector<Element> e(t + 1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[0] = 1;
    for (int l : table.positions(i)) {
      const Element z = spec.alpha_pow(l);
      for (std::size_t k = t; k >= 1; --k) e[k] ^= f.mul(e[k - 1], z);
    }
    for (std::size_t k = 1; k <= t; ++k) sigma[k - 1][i] = e[k];
  }
  return sigma;
}

// ---- verification ----

VerifyReport verify_locator(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table) {
  if (loc.t != table.t() || static_cast<int>(loc.coeffs.size()) != loc.t)
    throw std::invalid_argument("locator degree does not match the table");
  const VariableBinding binding(loc, spec);
  const Program prog(loc.coeffs);
  const auto result = prog.evaluate_batch(spec.field(), binding.bind_columns(table.flat_syndromes(), table.size()));
  const auto sigma = elementary_symmetric(spec, table);

  VerifyReport rep;
  rep.total = table.size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool good = !result.fault[i];
    for (std::size_t k = 0; good && k < sigma.size(); ++k) good = result.roots[k][i] == sigma[k][i];
    if (good) {
      ++rep.passed;
      continue;
    }
    ++rep.failure_count;
    if (rep.failures.size() < 8) {
      VerifyFailure fl;
      fl.entry = i;
      fl.positions.assign(table.positions(i).begin(), table.positions(i).end());
      fl.fault = result.fault[i] != 0;
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        fl.expected.push_back(sigma[k][i]);
        fl.got.push_back(result.roots[k][i]);
      }
      rep.failures.push_back(std::move(fl));
    }
  }
  return rep;
}

ExprValues evaluate_on_table(const CodeSpec& spec, std::span<const Variable> vars, const Expr& e,
                             const SyndromeTable& table) {
  LocatorExpr holder;
  holder.vars.assign(vars.begin(), vars.end());
  const VariableBinding binding(holder, spec);
  const Expr roots[] = {e};
  const Program prog(roots);
  auto res = prog.evaluate_batch(spec.field(), binding.bind_columns(table.flat_syndromes(), table.size()));
  return {std::move(res.roots[0]), std::move(res.fault)};
}

BorderingReport check_bordering(const CodeSpec& spec, std::span<const Variable> vars, const Expr& h,
                                const SyndromeTable& table) {
  const auto ev = evaluate_on_table(spec, vars, h, table);
  BorderingReport rep;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (ev.fault[i]) {
      ++rep.faults;
      continue;
    }
    const Element v = ev.values[i];
    if (table.weight(i) < 2) {
      if (v != 0) ++rep.nonzero_below_two;
    } else if (table.weight(i) == 2) {
      if (v != 1) ++rep.not_one_at_two;
      if (v == 0) ++rep.zero_at_two;
    }
  }
  rep.bordering = rep.faults == 0 && rep.nonzero_below_two == 0 && rep.not_one_at_two == 0;
  rep.weakly_bordering = rep.faults == 0 && rep.zero_at_two == 0;
  return rep;
}

// ---- structure ----

StructureReport structure_check(const CodeSpec& spec, const SyndromeTable& table, int sigma, std::uint64_t lambda) {
  const int i1 = spec.defining_set().front();
  if (lambda == 0 || static_cast<std::uint64_t>(spec.n()) % lambda != 0)
    throw std::invalid_argument("lambda must divide n");
  if (sigma < 1 || sigma > table.t()) throw std::invalid_argument("sigma index out of range");
  if (i1 == 0 || sigma % i1 != 0) throw std::invalid_argument("first defining-set index must divide the degree");
  const Field& f = spec.field();
  const auto sig = elementary_symmetric(spec, table)[static_cast<std::size_t>(sigma - 1)];
  struct Class {
    Element value;
    std::size_t size;
    bool bad;
  };
  std::map<std::vector<Element>, Class> classes;
  StructureReport rep;
  rep.sigma = sigma;
  rep.lambda = lambda;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto s = table.syndromes(i);
    if (s[0] == 0) {
      ++rep.skipped_zero_anchor;
      continue;
    }
    std::vector<Element> key{f.pow_u(s[0], lambda)};
    for (std::size_t j = 1; j < s.size(); ++j)
      key.push_back(f.mul(s[j], f.pow(s[0], -static_cast<std::int64_t>(spec.defining_set()[j]))));
    const Element value = f.div(sig[i], f.pow_u(s[0], static_cast<std::uint64_t>(sigma / i1)));
    auto [it, fresh] = classes.emplace(key, Class{value, 0, false});
    ++it->second.size;
    if (!fresh && it->second.value != value && !it->second.bad) {
      it->second.bad = true;
      ++rep.violations;
      if (rep.examples.size() < 4) {
        std::string ex = "entry " + std::to_string(i) + " positions {";
        for (int l : table.positions(i)) ex += " " + std::to_string(l);
        ex += " }";
        rep.examples.push_back(ex);
      }
    }
  }
  rep.classes = classes.size();
  rep.smallest_class = classes.empty() ? 0 : table.size();
  for (const auto& [k, c] : classes) {
    rep.largest_class = std::max(rep.largest_class, c.size);
    rep.smallest_class = std::min(rep.smallest_class, c.size);
  }
  return rep;
}

// ---- interpolation ----

namespace {

std::vector<Element> anchor_values(const CodeSpec& spec, const SyndromeTable& table) {
  const auto d = spec.derive(1);
  if (!d) throw HypothesisError("syndrome of 1 is not available for " + spec.label());
  std::vector<Element> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    out[i] = spec.field().frobenius(table.syndromes(i)[static_cast<std::size_t>(d->index)], d->frobenius);
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
std::vector<Element> lagrange(const Field& f, const std::vector<Element>& xs, const std::vector<Element>& ys) {
  const std::size_t k = xs.size();
  std::vector<Element> full{1};
  for (Element x : xs) {
    std::vector<Element> next(full.size() + 1, 0);
    for (std::size_t i = 0; i < full.size(); ++i) {
      next[i + 1] ^= full[i];
      next[i] ^= f.mul(full[i], x);
    }
    full = std::move(next);
  }
  std::vector<Element> out(k, 0), q(k);
  for (std::size_t p = 0; p < k; ++p) {
    if (ys[p] == 0) continue;
    // q = full / (y - xs[p])
    Element carry = 0;
    for (std::size_t i = k; i-- > 0;) {
      carry = full[i + 1] ^ f.mul(carry, xs[p]);
      q[i] = carry;
    }
    Element den = 0;
    for (std::size_t i = k; i-- > 0;) den = f.mul(den, xs[p]) ^ q[i];
    const Element scale = f.div(ys[p], den);
    for (std::size_t i = 0; i < k; ++i) out[i] ^= f.mul(scale, q[i]);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Expr monomial(Element coeff, const Expr& base, std::uint64_t exponent) {
  Expr p = exponent == 0 ? Expr::constant(1) : base.pow(exponent);
  if (coeff == 1) return p;
  return Expr::constant(coeff) * p;
}

int ensure_var(std::vector<Variable>& vars, int exponent) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].exponent == exponent) return static_cast<int>(i);
  vars.push_back({"s" + std::to_string(exponent), exponent});
  return static_cast<int>(vars.size()) - 1;
}

}  // namespace

UnivariateInterpolation interpolate_univariate(const CodeSpec& spec, const SyndromeTable& table, int sigma) {
  if (spec.r() != 1) throw HypothesisError("univariate interpolation needs exactly one defining-set entry");
  const Field& f = spec.field();
  const auto x1 = anchor_values(spec, table);
  const auto sig = elementary_symmetric(spec, table).at(static_cast<std::size_t>(sigma - 1));
  std::map<Element, Element> points;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (x1[i] == 0) {
      if (sig[i] != 0) throw Error("coefficient is nonzero where the syndrome of 1 vanishes");
      continue;
    }
    const Element y = f.pow_u(x1[i], static_cast<std::uint64_t>(spec.n()));
    const Element a = f.div(sig[i], f.pow_u(x1[i], static_cast<std::uint64_t>(sigma)));
    auto [it, fresh] = points.emplace(y, a);
    if (!fresh && it->second != a) throw Error("coefficient is not a function of x1^n times x1^sigma");
  }
  std::vector<Element> xs, ys;
  for (auto [y, a] : points) {
    xs.push_back(y);
    ys.push_back(a);
  }
  UnivariateInterpolation out;
  out.sigma = sigma;
  out.n = spec.n();
  out.a = lagrange(f, xs, ys);
  std::uint64_t total = 0;
  for (int v = 1; v <= table.t(); ++v) total += binomial(spec.n(), v);
  out.bound = total / static_cast<std::uint64_t>(spec.n());
  std::vector<Expr> terms;
  const Expr x = Expr::var(0);
  for (std::size_t c = 0; c < out.a.size(); ++c) {
    if (out.a[c] == 0) continue;
    ++out.term_count;
    terms.push_back(monomial(out.a[c], x, static_cast<std::uint64_t>(sigma) + c * static_cast<std::uint64_t>(spec.n())));
  }
  out.expr = Expr::sum(std::move(terms));
  return out;
}

std::vector<Element> interpolate_zero_completion(const CodeSpec& spec, const SyndromeTable& table, int sigma) {
  const Field& f = spec.field();
  if (f.m() > 16) throw BudgetExceeded("dense zero-completion limited to m <= 16");
  if (spec.r() != 1) throw HypothesisError("zero-completion interpolation needs exactly one defining-set entry");
  const auto x1 = anchor_values(spec, table);
  const auto sig = elementary_symmetric(spec, table).at(static_cast<std::size_t>(sigma - 1));
  const std::uint32_t q = f.size();
  std::vector<Element> c(q, 0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Element v = sig[i];
    if (v == 0) continue;
    c[q - 1] ^= v;
    if (x1[i] == 0) {
      c[0] ^= v;
      continue;
    }
    const Element step = f.inv(x1[i]);
    Element p = f.mul(v, step);
    for (std::uint32_t j = 1; j + 1 < q; ++j) {
      c[j] ^= p;
      p = f.mul(p, step);
    }
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Expr synthesize_function(const CodeSpec& spec, const SyndromeTable& table, std::span<const Element> values, int degree,
                         std::vector<Variable>& vars) {
  const Field& f = spec.field();
  const auto anchor = spec.derive(1);
  if (!anchor) {
    auto tab = std::make_shared<LookupTable>();
    tab->arity = spec.r();
    std::vector<Expr> keys;
    for (int e : spec.defining_set()) keys.push_back(Expr::var(ensure_var(vars, e)));
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto s = table.syndromes(i);
      tab->values.emplace(std::vector<Element>(s.begin(), s.end()), values[i]);
    }
    return Expr::lookup(std::move(keys), std::move(tab));
  }

  const auto coset1 = cyclotomic_coset(spec.n(), 1);
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < spec.defining_set().size(); ++j)
    if (std::find(coset1.begin(), coset1.end(), spec.defining_set()[j]) == coset1.end()) others.push_back(j);

  const Expr x1 = Expr::var(ensure_var(vars, 1));
  std::vector<Expr> keys{x1.pow(static_cast<std::uint64_t>(spec.n()))};
  std::vector<Expr> tail_keys;
  for (std::size_t j : others) {
    const int e = spec.defining_set()[j];
    const Expr xe = Expr::var(ensure_var(vars, e));
    tail_keys.push_back(xe);
    keys.push_back(e == 0 ? xe : xe * x1.pow(f.order() - static_cast<std::uint64_t>(e)));
  }

  auto main = std::make_shared<LookupTable>();
  main->arity = static_cast<int>(keys.size());
  auto tail = std::make_shared<LookupTable>();
  tail->arity = static_cast<int>(tail_keys.size());
  const auto x1v = anchor_values(spec, table);
  bool tail_needed = false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto s = table.syndromes(i);
    std::vector<Element> key;
    Element value = values[i];
    LookupTable* target = tail.get();
    if (x1v[i] != 0) {
      key.push_back(f.pow_u(x1v[i], static_cast<std::uint64_t>(spec.n())));
      for (std::size_t j : others) {
        const int e = spec.defining_set()[j];
        key.push_back(e == 0 ? s[j] : f.mul(s[j], f.pow(x1v[i], -e)));
      }
      value = f.div(value, f.pow_u(x1v[i], static_cast<std::uint64_t>(degree)));
      target = main.get();
    } else {
      for (std::size_t j : others) key.push_back(s[j]);
      tail_needed = tail_needed || value != 0;
    }
    auto [it, fresh] = target->values.emplace(std::move(key), value);
    if (!fresh && it->second != value) throw Error("synthesized function is not well defined on " + spec.label());
  }
  Expr body = Expr::lookup(std::move(keys), std::move(main));
  if (degree > 0) body = x1.pow(static_cast<std::uint64_t>(degree)) * body;
  if (tail_needed) {
    if (tail_keys.empty()) throw Error("nonzero value with vanishing syndromes");
    body = body + (Expr::constant(1) + x1.pow(f.order())) * Expr::lookup(std::move(tail_keys), std::move(tail));
  }
  return body;
}

LocatorExpr synthesize_locator(const CodeSpec& spec, const SyndromeTable& table) {
  LocatorExpr loc;
  loc.t = table.t();
  loc.family = "synth";
  const auto sigma = elementary_symmetric(spec, table);
  const bool univariate = spec.r() == 1 && spec.derive(1).has_value();
  for (int k = 1; k <= loc.t; ++k) {
    if (univariate) {
      if (loc.vars.empty()) loc.vars.push_back({"s1", 1});
      loc.coeffs.push_back(interpolate_univariate(spec, table, k).expr);
    } else {
      loc.coeffs.push_back(synthesize_function(spec, table, sigma[static_cast<std::size_t>(k - 1)], k, loc.vars));
    }
  }
  return loc;
}

}  // namespace gelp
