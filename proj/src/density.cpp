#include "gelp/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <unordered_map>

#include "gelp/error.hpp"

namespace gelp {

// ---- SparsePoly ----

SparsePoly SparsePoly::constant(Element c) {
  SparsePoly p;
  if (c) p.terms_.emplace(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::variable(std::uint32_t id, std::uint64_t exponent) {
  SparsePoly p;
  if (exponent == 0)
    p.terms_.emplace(Monomial{}, 1);
  else
    p.terms_.emplace(Monomial{{id, exponent}}, 1);
  return p;
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

void SparsePoly::add_term(const Monomial& mono, Element coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(mono, coeff);
  if (!fresh) {
    it->second ^= coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

// ---- PolyArith ----

void PolyArith::check(const SparsePoly& p) const {
  if (p.size() > budget_) throw BudgetExceeded("expansion exceeds " + std::to_string(budget_) + " monomials");
}

SparsePoly PolyArith::add(const SparsePoly& a, const SparsePoly& b) const {
  SparsePoly r = a.size() >= b.size() ? a : b;
  for (const auto& [m, c] : (a.size() >= b.size() ? b : a).terms()) r.add_term(m, c);
  check(r);
  return r;
}

namespace {

SparsePoly::Monomial merge(const SparsePoly::Monomial& x, const SparsePoly::Monomial& y) {
  SparsePoly::Monomial out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first))
      out.push_back(x[i++]);
    else if (i == x.size() || y[j].first < x[i].first)
      out.push_back(y[j++]);
    else {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePoly PolyArith::mul(const SparsePoly& a, const SparsePoly& b) const {
  if (a.size() * b.size() > 64 * budget_) throw BudgetExceeded("product too large to expand");
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(merge(ma, mb), f_.mul(ca, cb));
  check(r);
  return r;
}

SparsePoly PolyArith::frobenius(const SparsePoly& a, int times) const {
  SparsePoly r;
  for (const auto& [m, c] : a.terms()) {
    auto mono = m;
    for (auto& [id, e] : mono) e <<= times;
    r.add_term(mono, f_.frobenius(c, times));
  }
  return r;
}

SparsePoly PolyArith::pow(const SparsePoly& a, std::uint64_t k) const {
  if (k == 0) return SparsePoly::constant(1);
  if (a.is_monomial()) {
    auto m = a.terms().begin()->first;
    const Element c = a.terms().begin()->second;
    for (auto& [id, e] : m) e *= k;
    SparsePoly r;
    r.add_term(m, f_.pow_u(c, k));
    return r;
  }
  SparsePoly result = SparsePoly::constant(1), cur = a;
  while (true) {
    if (k & 1) result = mul(result, cur);
    k >>= 1;
    if (!k) break;
    cur = frobenius(cur, 1);
  }
  return result;
}

Element PolyArith::evaluate(const SparsePoly& p, const std::map<std::uint32_t, Element>& point) const {
  Element acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Element t = c;
    for (auto [id, e] : m) t = f_.mul(t, f_.pow_u(point.at(id), e));
    acc ^= t;
  }
  return acc;
}

// ---- lookup tables as polynomials ----

namespace {

std::vector<Element> basis(const Field& f, const std::vector<Element>& pts, std::size_t which) {
  std::vector<Element> poly{1};
  Element den = 1;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == which) continue;
    std::vector<Element> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];
      next[i] ^= f.mul(poly[i], pts[j]);
    }
    poly = std::move(next);
    den = f.mul(den, pts[which] ^ pts[j]);
  }
  const Element s = f.inv(den);
  for (auto& c : poly) c = f.mul(c, s);
  return poly;
}

constexpr std::size_t kSparseLookupPoints = 1024;

// Solves m * x = rhs in place (m square, invertible).
std::vector<Element> solve(const Field& f, std::vector<std::vector<Element>> m, std::vector<Element> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Element inv = f.inv(m[col][col]);
    for (std::size_t j = col; j < n; ++j) m[col][j] = f.mul(m[col][j], inv);
    rhs[col] = f.mul(rhs[col], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Element factor = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] ^= f.mul(factor, m[col][j]);
      rhs[r] ^= f.mul(factor, rhs[col]);
    }
  }
  return rhs;
}

// Interpolant on the first linearly independent monomials in graded order, so at most one term per key.
// It matches the table on its keys only; nullopt when the table is too large for the dense solve.
std::optional<SparsePoly> sparse_lookup_polynomial(const LookupTable& table, const Field& f,
                                                   const std::vector<std::vector<Element>>& coords) {
  const std::size_t npts = table.values.size();
  const auto k = static_cast<std::size_t>(table.arity);
  if (npts == 0 || npts > kSparseLookupPoints) return std::nullopt;
  std::vector<std::vector<Element>> keys;
  for (const auto& [key, v] : table.values) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  std::vector<Element> values;
  for (const auto& key : keys) values.push_back(table.at(key));

  std::vector<std::uint64_t> caps(k);
  std::uint64_t max_degree = 0;
  for (std::size_t c = 0; c < k; ++c) {
    caps[c] = coords[c].size() - 1;
    max_degree += caps[c];
  }

  std::vector<std::vector<Element>> echelon, columns;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<std::uint64_t>> chosen;
  std::vector<std::uint64_t> expo(k, 0);
  std::size_t examined = 0;
  const std::size_t limit = 64 * npts + 1024;

  const auto consider = [&]() {
    ++examined;
    std::vector<Element> col(npts);
    for (std::size_t i = 0; i < npts; ++i) {
      Element v = 1;
      for (std::size_t c = 0; c < k && v; ++c) v = f.mul(v, f.pow_u(keys[i][c], expo[c]));
      col[i] = v;
    }
    std::vector<Element> red = col;
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const Element a = red[pivots[r]];
      if (!a) continue;
      for (std::size_t i = 0; i < npts; ++i) red[i] ^= f.mul(a, echelon[r][i]);
    }
    std::size_t p = 0;
    while (p < npts && red[p] == 0) ++p;
    if (p == npts) return;
    const Element inv = f.inv(red[p]);
    for (auto& x : red) x = f.mul(x, inv);
    echelon.push_back(std::move(red));
    pivots.push_back(p);
    columns.push_back(std::move(col));
    chosen.push_back(expo);
  };
  // exponent vectors of total degree `left` over coordinates c.., within the caps
  const std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t c, std::uint64_t left) {
    if (chosen.size() == npts || examined > limit) return;
    if (c + 1 == k) {
      if (left <= caps[c]) {
        expo[c] = left;
        consider();
      }
      return;
    }
    for (std::uint64_t e = 0; e <= std::min(left, caps[c]); ++e) {
      expo[c] = e;
      walk(c + 1, left - e);
    }
  };
  for (std::uint64_t d = 0; d <= max_degree && chosen.size() < npts && examined <= limit; ++d) walk(0, d);
  if (chosen.size() < npts) return std::nullopt;

  std::vector<std::vector<Element>> m(npts, std::vector<Element>(npts));
  for (std::size_t j = 0; j < npts; ++j)
    for (std::size_t i = 0; i < npts; ++i) m[i][j] = columns[j][i];
  const auto coeffs = solve(f, std::move(m), values);
  SparsePoly out;
  for (std::size_t j = 0; j < npts; ++j) {
    if (!coeffs[j]) continue;
    SparsePoly::Monomial mono;
    for (std::size_t c = 0; c < k; ++c)
      if (chosen[j][c]) mono.emplace_back(static_cast<std::uint32_t>(c), chosen[j][c]);
    out.add_term(mono, coeffs[j]);
  }
  return out;
}

// Lookup as a polynomial in its keys: sparse interpolation when affordable, else tensor Lagrange over the key grid.
SparsePoly lookup_polynomial(const LookupTable& table, const PolyArith& ar) {
  const Field& f = ar.field();
  const auto k = static_cast<std::size_t>(table.arity);
  if (k == 0) return SparsePoly::constant(table.values.empty() ? 0 : table.values.begin()->second);
  std::vector<std::vector<Element>> coords(k);
  for (const auto& [key, v] : table.values)
    for (std::size_t c = 0; c < k; ++c) coords[c].push_back(key[c]);
  for (auto& cs : coords) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  }
  if (auto sparse = sparse_lookup_polynomial(table, f, coords)) return std::move(*sparse);
  std::size_t grid = 1;
  for (const auto& cs : coords) {
    grid *= cs.size();
    if (grid > ar.budget()) throw BudgetExceeded("lookup grid exceeds the monomial budget");
  }
  if (grid * table.values.size() > 200'000'000) throw BudgetExceeded("lookup interpolation too expensive");
  std::vector<std::vector<std::vector<Element>>> bases(k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < coords[c].size(); ++i) bases[c].push_back(basis(f, coords[c], i));
  std::vector<Element> dense(grid, 0);
  std::vector<std::size_t> idx(k);
  for (const auto& [key, v] : table.values) {
    if (v == 0) continue;
    for (std::size_t c = 0; c < k; ++c)
      idx[c] = static_cast<std::size_t>(std::lower_bound(coords[c].begin(), coords[c].end(), key[c]) - coords[c].begin());
    // outer product, last coordinate fastest
    std::vector<Element> acc{v};
    for (std::size_t c = 0; c < k; ++c) {
      const auto& bv = bases[c][idx[c]];
      std::vector<Element> next(acc.size() * bv.size());
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < bv.size(); ++b) next[a * bv.size() + b] = f.mul(acc[a], bv[b]);
      acc = std::move(next);
    }
    for (std::size_t g = 0; g < grid; ++g) dense[g] ^= acc[g];
  }
  SparsePoly out;
  for (std::size_t g = 0; g < grid; ++g) {
    if (!dense[g]) continue;
    SparsePoly::Monomial mono;
    std::size_t rest = g;
    for (std::size_t c = k; c-- > 0;) {
      const std::size_t e = rest % coords[c].size();
      rest /= coords[c].size();
      if (e) mono.emplace_back(static_cast<std::uint32_t>(c), e);
    }
    std::sort(mono.begin(), mono.end());
    out.add_term(mono, dense[g]);
  }
  return out;
}

SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& values, const PolyArith& ar) {
  SparsePoly out;
  std::map<std::pair<std::uint32_t, std::uint64_t>, SparsePoly> cache;
  for (const auto& [m, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(c);
    for (auto [id, e] : m) {
      auto it = cache.find({id, e});
      if (it == cache.end()) it = cache.emplace(std::make_pair(id, e), ar.pow(values.at(id), e)).first;
      term = ar.mul(term, it->second);
    }
    for (const auto& [tm, tc] : term.terms()) out.add_term(tm, tc);
    if (out.size() > ar.budget()) throw BudgetExceeded("substituted lookup exceeds the monomial budget");
  }
  return out;
}

}  // namespace

// ---- expansion ----

SparsePoly expand(const Expr& e, const Field& f, std::size_t budget) {
  const PolyArith ar(f, budget);
  std::unordered_map<const Node*, SparsePoly> memo;
  std::function<SparsePoly(const Node&)> go = [&](const Node& n) -> SparsePoly {
    if (auto it = memo.find(&n); it != memo.end()) return it->second;
    SparsePoly r;
    switch (n.op) {
      case Op::Var:
        r = SparsePoly::variable(static_cast<std::uint32_t>(n.var));
        break;
      case Op::Const:
        r = SparsePoly::constant(n.value);
        break;
      case Op::Pow:
        r = ar.pow(go(*n.kids[0]), n.exponent);
        break;
      case Op::Sum:
        for (const auto& k : n.kids) r = ar.add(r, go(*k));
        break;
      case Op::Product:
        r = SparsePoly::constant(1);
        for (const auto& k : n.kids) r = ar.mul(r, go(*k));
        break;
      case Op::Quotient:
        throw Error("expression contains a quotient and is not a polynomial");
      case Op::Lookup: {
        std::vector<SparsePoly> keys;
        for (const auto& k : n.kids) keys.push_back(go(*k));
        r = substitute(lookup_polynomial(*n.table, ar), keys, ar);
        break;
      }
    }
    memo.emplace(&n, r);
    return r;
  };
  return go(e.node());
}

std::size_t term_count(const Expr& e, const Field& f, std::size_t budget) { return expand(e, f, budget).size(); }

Fraction to_fraction(const Expr& e, const Field& f, std::size_t budget) {
  const PolyArith ar(f, budget);
  std::unordered_map<const Node*, Fraction> memo;
  std::function<Fraction(const Node&)> go = [&](const Node& n) -> Fraction {
    if (auto it = memo.find(&n); it != memo.end()) return it->second;
    Fraction r{SparsePoly{}, SparsePoly::constant(1)};
    switch (n.op) {
      case Op::Var:
      case Op::Const:
      case Op::Lookup:
        r.num = expand(Expr(std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &n)), f, budget);
        break;
      case Op::Pow: {
        const Fraction b = go(*n.kids[0]);
        r = {ar.pow(b.num, n.exponent), ar.pow(b.den, n.exponent)};
        break;
      }
      case Op::Sum:
        r = go(*n.kids[0]);
        for (std::size_t i = 1; i < n.kids.size(); ++i) {
          const Fraction x = go(*n.kids[i]);
          if (x.den == r.den)
            r.num = ar.add(r.num, x.num);
          else
            r = {ar.add(ar.mul(r.num, x.den), ar.mul(x.num, r.den)), ar.mul(r.den, x.den)};
        }
        break;
      case Op::Product:
        r = go(*n.kids[0]);
        for (std::size_t i = 1; i < n.kids.size(); ++i) {
          const Fraction x = go(*n.kids[i]);
          r = {ar.mul(r.num, x.num), ar.mul(r.den, x.den)};
        }
        break;
      case Op::Quotient: {
        const Fraction a = go(*n.kids[0]), b = go(*n.kids[1]);
        r = {ar.mul(a.num, b.den), ar.mul(a.den, b.num)};
        if (r.den.is_zero()) throw Error("quotient by the zero polynomial");
        break;
      }
    }
    memo.emplace(&n, r);
    return r;
  };
  return go(e.node());
}

// ---- representations ----

std::size_t representation_density(const RationalRepresentation& rep) {
  std::size_t d = rep.outer.size();
  for (const auto& f : rep.num) d += f.size() > 0 ? f.size() - 1 : 0;
  for (const auto& g : rep.den)
    if (!g.is_constant()) d += g.size();
  return d;
}

RationalRepresentation trivial_representation(const SparsePoly& p) {
  RationalRepresentation rep;
  rep.name = "trivial";
  std::uint32_t i = 0;
  for (const auto& [m, c] : p.terms()) {
    SparsePoly h;
    h.add_term(m, c);
    rep.outer.add_term({{i++, 1}}, 1);
    rep.num.push_back(std::move(h));
    rep.den.push_back(SparsePoly::constant(1));
  }
  return rep;
}

namespace {

enum class Policy { Quotients, QuotientsAndPowers, Coefficients };

class RepBuilder {
 public:
  RepBuilder(const Field& f, std::size_t budget, Policy p) : f_(f), budget_(budget), ar_(f, budget), policy_(p) {}

  RationalRepresentation build(const LocatorExpr& loc, std::string name) {
    const SparsePoly z = atom_var(Fraction{SparsePoly::variable(kZVariable), SparsePoly::constant(1)});
    SparsePoly outer = ar_.pow(z, static_cast<std::uint64_t>(loc.t));
    for (int k = 1; k <= loc.t; ++k) {
      const Expr& c = loc.coeffs[static_cast<std::size_t>(k - 1)];
      SparsePoly coef = policy_ == Policy::Coefficients && c.op() != Op::Const ? atom_var(to_fraction(c, f_, budget_))
                                                                              : outer_of(c.node());
      outer = ar_.add(outer, ar_.mul(coef, ar_.pow(z, static_cast<std::uint64_t>(loc.t - k))));
    }
    RationalRepresentation rep;
    rep.name = std::move(name);
    rep.outer = std::move(outer);
    rep.num = std::move(num_);
    rep.den = std::move(den_);
    return rep;
  }

 private:
  SparsePoly atom_var(Fraction fr) {
    auto key = std::make_pair(fr.num, fr.den);
    auto it = atoms_.find(key);
    if (it == atoms_.end()) {
      it = atoms_.emplace(std::move(key), static_cast<std::uint32_t>(num_.size())).first;
      num_.push_back(std::move(fr.num));
      den_.push_back(std::move(fr.den));
    }
    return SparsePoly::variable(it->second);
  }

  Expr as_expr(const Node& n) { return Expr(std::shared_ptr<const Node>(std::shared_ptr<const Node>{}, &n)); }

  SparsePoly outer_of(const Node& n) {
    if (auto it = memo_.find(&n); it != memo_.end()) return it->second;
    SparsePoly r;
    switch (n.op) {
      case Op::Var:
        r = atom_var(Fraction{SparsePoly::variable(static_cast<std::uint32_t>(n.var)), SparsePoly::constant(1)});
        break;
      case Op::Const:
        r = SparsePoly::constant(n.value);
        break;
      case Op::Quotient:
        r = atom_var(to_fraction(as_expr(n), f_, budget_));
        break;
      case Op::Pow: {
        const Node& base = *n.kids[0];
        if (policy_ == Policy::QuotientsAndPowers && base.op != Op::Var) {
          Fraction fb = to_fraction(as_expr(base), f_, budget_);
          if (!(fb.num.is_monomial() && fb.den.is_constant())) {
            r = ar_.pow(atom_var(std::move(fb)), n.exponent);
            break;
          }
        }
        r = ar_.pow(outer_of(base), n.exponent);
        break;
      }
      case Op::Sum:
        for (const auto& k : n.kids) r = ar_.add(r, outer_of(*k));
        break;
      case Op::Product:
        r = SparsePoly::constant(1);
        for (const auto& k : n.kids) r = ar_.mul(r, outer_of(*k));
        break;
      case Op::Lookup: {
        std::vector<SparsePoly> keys;
        for (const auto& k : n.kids) keys.push_back(outer_of(*k));
        r = substitute(lookup_polynomial(*n.table, ar_), keys, ar_);
        break;
      }
    }
    memo_.emplace(&n, r);
    return r;
  }

  const Field& f_;
  std::size_t budget_;
  PolyArith ar_;
  Policy policy_;
  std::map<std::pair<SparsePoly, SparsePoly>, std::uint32_t> atoms_;
  std::vector<SparsePoly> num_, den_;
  std::unordered_map<const Node*, SparsePoly> memo_;
};

}  // namespace

std::vector<RationalRepresentation> natural_representations(const LocatorExpr& loc, const Field& f,
                                                            std::size_t budget) {
  std::vector<RationalRepresentation> out;
  const std::pair<Policy, const char*> policies[] = {{Policy::Quotients, "quotient-atoms"},
                                                     {Policy::QuotientsAndPowers, "power-atoms"},
                                                     {Policy::Coefficients, "coefficient-atoms"}};
  for (auto [p, name] : policies) {
    try {
      out.push_back(RepBuilder(f, budget, p).build(loc, name));
    } catch (const Error&) {
    }
  }
  try {
    const PolyArith ar(f, budget);
    const SparsePoly z = SparsePoly::variable(kZVariable);
    SparsePoly whole = ar.pow(z, static_cast<std::uint64_t>(loc.t));
    for (int k = 1; k <= loc.t; ++k)
      whole = ar.add(whole, ar.mul(expand(loc.coeffs[static_cast<std::size_t>(k - 1)], f, budget),
                                   ar.pow(z, static_cast<std::uint64_t>(loc.t - k))));
    out.push_back(trivial_representation(whole));
  } catch (const Error&) {
  }
  return out;
}

EvalCost eval_cost_estimate(const CodeSpec& spec) {
  const double q = static_cast<double>(spec.field().order());
  const double r = spec.r();
  EvalCost c;
  c.locator = spec.t() * std::pow(q * (r - 1) + q / spec.n(), r / 2.0);
  c.chien = static_cast<double>(spec.n()) * spec.n();
  return c;
}

DensityReport density_report(const CodeSpec& spec, const LocatorExpr& loc, std::size_t budget) {
  DensityReport rep;
  rep.cost = eval_cost_estimate(spec);
  bool all = true;
  std::size_t total = 0;
  for (const Expr& c : loc.coeffs) {
    CoefficientTerms ct;
    try {
      const Fraction fr = to_fraction(c, spec.field(), budget);
      ct.available = true;
      ct.polynomial = fr.den.is_constant();
      ct.numerator = fr.num.size();
      ct.denominator = ct.polynomial ? 0 : fr.den.size();
      total += ct.numerator + ct.denominator;
    } catch (const Error& e) {
      all = false;
      rep.notes.push_back(std::string("coefficient not expandable: ") + e.what());
    }
    rep.coefficients.push_back(ct);
  }
  if (all) rep.monomial_total = total;
  for (const auto& r : natural_representations(loc, spec.field(), budget)) {
    const std::size_t d = representation_density(r);
    rep.representations.emplace_back(r.name, d);
    if (!rep.functional_density_upper || d < *rep.functional_density_upper) {
      rep.functional_density_upper = d;
      rep.best_representation = r.name;
    }
  }
  if (!rep.functional_density_upper) rep.notes.push_back("no representation within the monomial budget");
  return rep;
}

SparsityVerdict sparsity_check(const CodeSpec& spec, const DensityReport& report, double epsilon) {
  SparsityVerdict v;
  v.bound = std::pow(static_cast<double>(spec.n()), epsilon);
  v.sparse = report.functional_density_upper && static_cast<double>(*report.functional_density_upper) <= v.bound;
  if (spec.t() == 3 && report.monomial_total) {
    v.five_n_checked = true;
    v.within_five_n = *report.monomial_total <= 5u * static_cast<std::size_t>(spec.n());
  }
  return v;
}

}  // namespace gelp
