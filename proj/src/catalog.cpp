#include "gelp/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "gelp/error.hpp"

namespace gelp {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

class Builder {
 public:
  Builder(const CodeSpec& spec, std::string family, int t) : spec_(spec) {
    loc_.t = t;
    loc_.family = std::move(family);
    require(spec.t() == t, "needs t = " + std::to_string(t) + ", code has t = " + std::to_string(spec.t()));
  }

  void require(bool cond, const std::string& what) const {
    if (!cond) throw HypothesisError(loc_.family + " on " + spec_.label() + ": " + what);
  }

  // Variable with an explicit name; a repeated name must carry the same exponent.
  Expr x(const std::string& name, std::int64_t exponent) {
    const int e = static_cast<int>(mod_floor(exponent, spec_.n()));
    require(spec_.in_complete_set(e), "syndrome of " + std::to_string(e) + " is not in the complete defining set");
    if (int idx = loc_.variable(name); idx >= 0) {
      require(loc_.vars[static_cast<std::size_t>(idx)].exponent == e, "variable " + name + " rebound");
      return Expr::var(idx);
    }
    loc_.vars.push_back({name, e});
    return Expr::var(static_cast<int>(loc_.vars.size()) - 1);
  }

  // Variable named after its exponent reduced mod n.
  Expr xe(std::int64_t exponent) { return x("x" + std::to_string(mod_floor(exponent, spec_.n())), exponent); }

  LocatorExpr finish(std::vector<Expr> coeffs) {
    loc_.coeffs = std::move(coeffs);
    return std::move(loc_);
  }

  std::vector<Variable>& vars() { return loc_.vars; }
  const CodeSpec& spec() const { return spec_; }

 private:
  const CodeSpec& spec_;
  LocatorExpr loc_;
};

Expr one() { return Expr::constant(1); }

}  // namespace

Expr parity_border(std::vector<Variable>& vars) {
  int idx = -1;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].exponent == 0) idx = static_cast<int>(i);
  if (idx < 0) {
    vars.push_back({"x0", 0});
    idx = static_cast<int>(vars.size()) - 1;
  }
  return one() + Expr::var(idx);
}

// ---- t = 2 ----

LocatorExpr t2_bch(const CodeSpec& spec) {
  Builder b(spec, "t2-BCH", 2);
  const Expr x1 = b.xe(1), x3 = b.xe(3);
  return b.finish({x1, (x1.pow(3) + x3) / x1});
}

BorderedLocator t2_lambda(const CodeSpec& spec, std::uint64_t l, const SyndromeTable& table) {
  Builder b(spec, "t2-lambda", 2);
  const auto n = static_cast<std::int64_t>(spec.n());
  b.require(l >= 3 && is_power_of_two(static_cast<std::int64_t>(l - 1)), "l must be 2^v + 1 with v >= 1");
  b.require(std::gcd(static_cast<std::int64_t>(l) - 2, n) == 1, "gcd(l - 2, n) must be 1");
  const auto ll = static_cast<std::int64_t>(l % static_cast<std::uint64_t>(n));
  const Expr x1 = b.x("x1", 1), x2 = b.x("x2", ll);
  const std::int64_t half = (n + 1) / 2;
  const Expr x3 = b.x("x3", half), x4 = b.x("x4", (ll * half) % n);
  BorderedLocator out;
  out.wh = x1.pow(l) + x2;
  out.ovwh = x3.pow(2 * l) + x4.pow(2);
  if (table.t() != 2) throw std::invalid_argument("t2-lambda needs a t = 2 table");
  auto sigma2 = elementary_symmetric(spec, table)[1];
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.weight(i) != 2) sigma2[i] = 0;
  out.b_star = synthesize_function(spec, table, sigma2, 2, b.vars());
  out.locator = b.finish({x1, out.b_star * (out.wh / out.ovwh)});
  out.locator.family = "t2-lambda";
  return out;
}

LocatorExpr t2_sl(const CodeSpec& spec, std::int64_t l, std::int64_t s) {
  Builder b(spec, "t2-sl", 2);
  const auto n = static_cast<std::int64_t>(spec.n());
  b.require(std::gcd(mod_floor(l, n), n) == 1, "gcd(l, n) must be 1");
  b.require(std::gcd(mod_floor(s - 2 * l, n), n) == 1, "gcd(s - 2l, n) must be 1");
  const Expr x1 = b.x("x1", 1), x2 = b.x("x2", l), x3 = b.x("x3", s - 2 * l), x4 = b.x("x4", s - l),
             x5 = b.x("x5", s);
  const auto inv = static_cast<std::uint64_t>(mod_inverse(l, n));
  return b.finish({x1, ((x2 * x4 + x5) / x3).pow(inv)});
}

BorderedLocator t2_one_case(const CodeSpec& spec, std::int64_t l) {
  Builder b(spec, "t2-one-case", 2);
  const auto n = static_cast<std::int64_t>(spec.n());
  b.require(is_power_of_two(l), "l must be a power of 2");
  b.require((n - 1) % l == 0, "l must divide n - 1");
  b.require(l != n - 1, "l must differ from n - 1");
  b.require(n % 3 != 0, "3 must not divide n");
  const Expr x1 = b.x("x1", 1), x2 = b.x("x2", 2), x3 = b.x("x3", (n - 1) / l), x4 = b.x("x4", n - 2);
  BorderedLocator out;
  out.b_star = x1 / x3.pow(static_cast<std::uint64_t>(l));
  out.wh = x4 * x1.pow(2) + one();
  out.ovwh = x4 * x2 + one();
  out.locator = b.finish({x1, out.b_star * (out.wh / out.ovwh)});
  return out;
}

LocatorExpr t2_power(const CodeSpec& spec, int i, int j) {
  Builder b(spec, "t2-power", 2);
  b.require(i == 0, "only i = 0 is constructed");
  b.require(j >= 2 && j < 62, "j must be at least 2");
  const std::int64_t l = std::int64_t{1} << j, r = l - 1, s = l + 2;
  b.require(std::gcd(l - 2, static_cast<std::int64_t>(spec.n())) == 1, "gcd(2^j - 2, n) must be 1");
  const Expr x1 = b.x("x1", 1), x2 = b.x("x2", l), x3 = b.x("x3", r), x4 = b.x("x4", s);
  return b.finish({x1, (x1.pow(static_cast<std::uint64_t>(s)) + x4) / (x2 + x1 * x3)});
}

LocatorExpr t2_exceptional_e(const CodeSpec& spec) {
  Builder b(spec, "t2-exceptional(e)", 2);
  const std::vector<int> s{0, 1, 5};
  b.require(spec.n() == 51 && spec.complete_set() == complete_defining_set(51, s), "code must be 51:{0,1,5}");
  const Expr x1 = b.x("x1", 1), x2 = b.x("x2", 2), x3 = b.x("x3", 7), x4 = b.x("x4", 10);
  auto quintic = [](const Expr& y) { return Expr::sum({y.pow(4), y.pow(3), y.pow(2), y, one()}); };
  const Expr first = (x1.pow(10) + x4) / (x1 * (x1.pow(7) + x3));
  const Expr second = x1.pow(2) * (quintic(x1.pow(51)).pow(2) / quintic(x2.pow(51)));
  const Expr border = parity_border(b.vars());
  return b.finish({x1, (first + second) * border});
}

LocatorExpr t2_exceptional(const CodeSpec& spec, char which) {
  LocatorExpr loc;
  switch (which) {
    case 'a':
      loc = t2_one_case(spec, 1).locator;
      break;
    case 'b':
      loc = t2_sl(spec, 1, 10);
      break;
    case 'c':
      loc = t2_sl(spec, 2, 23);
      break;
    case 'd':
      loc = t2_power(spec, 0, 4);
      break;
    case 'e':
      return t2_exceptional_e(spec);
    default:
      throw std::invalid_argument("exceptional case must be one of a..e");
  }
  loc.family = std::string("t2-exceptional(") + which + ")";
  return loc;
}

// ---- t = 3 ----

LocatorExpr t3_bch(const CodeSpec& spec) {
  Builder b(spec, "t3-BCH", 3);
  const Expr x1 = b.xe(1), x3 = b.xe(3), x5 = b.xe(5);
  const Expr den = x1.pow(3) + x3;
  const Expr bb = (x1.pow(2) * x3 + x5) / den;
  const Expr cc = Expr::sum({x1.pow(3) * x3, x1.pow(6), x3.pow(2), x1 * x5}) / den;
  return b.finish({x1, bb, cc});
}

LocatorExpr t3_consecutive(const CodeSpec& spec, std::int64_t i) {
  Builder b(spec, "t3-consecutive", 3);
  const auto n = static_cast<std::int64_t>(spec.n());
  b.require(mod_floor(i, n) != 0, "i must be nonzero mod n");
  b.require(mod_floor(i + 2, n) != 0, "i + 2 must be nonzero mod n");
  const Expr x1 = b.xe(1);
  const Expr a0 = b.xe(i), a1 = b.xe(i + 1), a2 = b.xe(i + 2), a3 = b.xe(i + 3), a4 = b.xe(i + 4);
  const Expr u = a4 + x1 * a3, v = a3 + x1 * a2, w = a1.pow(2) + a0 * a2;
  return b.finish({x1, (a0 * u + a1 * v) / w, (a1 * u + a2 * v) / w});
}

LocatorExpr t3_powers(const CodeSpec& spec, int i, int j) {
  Builder b(spec, "t3-powers", 3);
  b.require(i >= 0 && j >= i + 2 && j < 62, "needs 0 <= i and j >= i + 2");
  const std::int64_t pi = std::int64_t{1} << i, pj = std::int64_t{1} << j;
  b.require(mod_floor(pj - 2 * pi, spec.n()) != mod_floor(pi, spec.n()),
            "2^j - 2^(i+1) = 2^i mod n makes the denominator vanish identically");
  const Expr x1 = b.xe(1), x3 = b.xe(3);
  const Expr xs = b.xe(pi + pj), xd = b.xe(pj - pi), xd2 = b.xe(pj - 2 * pi);
  const auto upi = static_cast<std::uint64_t>(pi);
  const Expr u = (x1.pow(3) + x3).pow(upi);
  const Expr v = x1.pow(static_cast<std::uint64_t>(pi + pj)) + xs;
  const Expr w = xd + x1.pow(upi) * xd2;
  const int m = spec.field().m();
  const auto root = std::uint64_t{1} << ((m - i % m) % m);  // inverse of the 2^i Frobenius
  return b.finish({x1, ((xd2 * u + v) / w).pow(root), ((xd * u + x1.pow(upi) * v) / w).pow(root)});
}

LocatorExpr t3_139(const CodeSpec& spec) {
  Builder b(spec, "t3-139", 3);
  b.require(spec.n() % 3 != 0, "3 must not divide n");
  b.require(spec.field().m() % 2 == 1, "3 divides 2^m - 1 for even m");
  const auto lstar = static_cast<std::uint64_t>(mod_inverse(3, spec.field().order()));
  const Expr x1 = b.xe(1), x2 = b.xe(2), x3 = b.xe(3), x9 = b.xe(9);
  const Expr c3 = x1.pow(3) + x3;
  const Expr d = (x9 + x1.pow(9)) / (x3 + x1.pow(3)) + c3.pow(2);
  const Expr h = c3 / (x1 * x2 + x3);
  const Expr dl = d.pow(lstar);
  return b.finish({x1, (x1.pow(2) + dl) * h, (x3 + x1 * dl) * h});
}

// ---- classification ----

namespace {

struct NamedCode {
  char tag;
  int n;
  std::vector<int> set;
};

const std::vector<NamedCode>& exceptional_codes() {
  static const std::vector<NamedCode> codes{
      {'a', 31, {1, 15}}, {'b', 31, {1, 5}}, {'c', 45, {1, 21}}, {'d', 51, {1, 9}}, {'e', 51, {0, 1, 5}}};
  return codes;
}

const std::vector<std::pair<int, std::vector<int>>>& table_entry_codes() {
  static const std::vector<std::pair<int, std::vector<int>>> codes{{21, {0, 1, 3, 7}}, {51, {1, 3, 9}}, {55, {0, 1}}};
  return codes;
}

bool same_code(const CodeSpec& spec, int n, const std::vector<int>& set) {
  return spec.n() == n && spec.complete_set() == complete_defining_set(n, set);
}

std::vector<std::int64_t> consecutive_runs(const CodeSpec& spec) {
  std::vector<std::int64_t> out;
  const std::int64_t n = spec.n();
  auto in = [&](std::int64_t e) { return spec.in_complete_set(e); };
  for (std::int64_t i = 1; i < n; ++i)
    if (mod_floor(i + 2, n) != 0 && in(i) && in(i + 1) && in(i + 2) && in(i + 3) && in(i + 4)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> power_pairs(const CodeSpec& spec) {
  std::vector<std::pair<int, int>> out;
  const std::int64_t n = spec.n();
  const int m = spec.field().m();
  auto in = [&](std::int64_t e) { return spec.in_complete_set(e); };
  if (!in(3)) return out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j <= i + m + 1; ++j) {
      const std::int64_t pi = std::int64_t{1} << i, pj = std::int64_t{1} << j;
      if (in(pi + pj) && in(pj - pi) && in(pj - 2 * pi) && mod_floor(pj - 2 * pi, n) != mod_floor(pi, n))
        out.emplace_back(i, j);
    }
  return out;
}

// The match itself first, then every other admissible parameterization of its family.
std::vector<FamilyMatch> parameter_variants(const CodeSpec& spec, const FamilyMatch& match) {
  std::vector<FamilyMatch> out{match};
  if (match.tag == "t3-consecutive") {
    for (auto i : consecutive_runs(spec))
      if (i != match.params.at("i")) out.push_back({match.tag, {{"i", i}}, {}});
  } else if (match.tag == "t3-powers") {
    for (auto [i, j] : power_pairs(spec))
      if (i != match.params.at("i") || j != match.params.at("j")) out.push_back({match.tag, {{"i", i}, {"j", j}}, {}});
  }
  return out;
}

}  // namespace

Classification classify(const CodeSpec& spec) {
  Classification out;
  const auto n = static_cast<std::int64_t>(spec.n());
  const int m = spec.field().m();
  auto in = [&](std::int64_t e) { return spec.in_complete_set(e); };
  auto add = [&](std::string tag, std::map<std::string, std::int64_t> params, std::string note = {}) {
    out.matches.push_back({std::move(tag), std::move(params), std::move(note)});
  };
  auto listed = [&](std::int64_t e) {
    const auto r = mod_floor(e, n);
    return std::find(spec.defining_set().begin(), spec.defining_set().end(), r) != spec.defining_set().end();
  };

  if (spec.t() == 2) {
    for (const auto& c : exceptional_codes())
      if (same_code(spec, c.n, c.set)) add(std::string("t2-exceptional(") + c.tag + ")", {});
    if (in(1) && in(3)) add("t2-BCH", {});
    if (in(1)) {
      for (int v = 1; v <= m; ++v) {
        const std::int64_t l = (std::int64_t{1} << v) + 1;
        if (in(l) && std::gcd(l - 2, n) == 1) {
          add("t2-lambda", {{"l", l}}, listed(l) ? "" : "syndrome of l comes from the complete defining set");
          break;
        }
      }
      bool found = false;
      for (std::int64_t l = 1; l < n && !found; ++l) {
        if (std::gcd(l, n) != 1 || !in(l)) continue;
        for (std::int64_t s = 0; s < n && !found; ++s)
          if (in(s - 2 * l) && in(s - l) && in(s) && std::gcd(mod_floor(s - 2 * l, n), n) == 1) {
            add("t2-sl", {{"l", l}, {"s", s}});
            found = true;
          }
      }
      if (n % 3 != 0)
        for (std::int64_t l = 1; l < n; l *= 2)
          if ((n - 1) % l == 0 && l != n - 1 && in((n - 1) / l) && in(2) && in(n - 2)) {
            add("t2-one-case", {{"l", l}});
            break;
          }
      for (int j = 2; j <= m + 1; ++j) {
        const std::int64_t l = std::int64_t{1} << j;
        if (std::gcd(l - 2, n) == 1 && in(l) && in(l - 1) && in(l + 2)) {
          add("t2-power", {{"i", 0}, {"j", j}});
          break;
        }
      }
    }
  } else if (spec.t() == 3 && in(1)) {
    if (in(3) && in(5)) add("t3-BCH", {});
    if (const auto runs = consecutive_runs(spec); !runs.empty()) add("t3-consecutive", {{"i", runs.front()}});
    if (const auto pairs = power_pairs(spec); !pairs.empty())
      add("t3-powers", {{"i", pairs.front().first}, {"j", pairs.front().second}});
    if (in(3) && in(9) && n % 3 != 0 && m % 2 == 1) add("t3-139", {});
    for (const auto& [tn, set] : table_entry_codes())
      if (same_code(spec, tn, set)) add("t3-table-entry", {});
  }
  out.family = out.matches.empty() ? "unclassified" : out.matches.front().tag;
  return out;
}

LocatorExpr construct(const CodeSpec& spec, const FamilyMatch& match, const SyndromeTable& table,
                      const std::string& data_dir) {
  auto p = [&](const char* k) { return match.params.at(k); };
  const std::string& tag = match.tag;
  if (tag.rfind("t2-exceptional(", 0) == 0) return t2_exceptional(spec, tag[15]);
  if (tag == "t2-BCH") return t2_bch(spec);
  if (tag == "t2-lambda") return t2_lambda(spec, static_cast<std::uint64_t>(p("l")), table).locator;
  if (tag == "t2-sl") return t2_sl(spec, p("l"), p("s"));
  if (tag == "t2-one-case") return t2_one_case(spec, p("l")).locator;
  if (tag == "t2-power") return t2_power(spec, static_cast<int>(p("i")), static_cast<int>(p("j")));
  if (tag == "t3-BCH") return t3_bch(spec);
  if (tag == "t3-consecutive") return t3_consecutive(spec, p("i"));
  if (tag == "t3-powers") return t3_powers(spec, static_cast<int>(p("i")), static_cast<int>(p("j")));
  if (tag == "t3-139") return t3_139(spec);
  if (tag == "t3-table-entry") return load_table_entry(spec, data_dir);
  throw std::invalid_argument("unknown family " + tag);
}

std::optional<LocatorExpr> patch_locator(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table) {
  const auto sigma = elementary_symmetric(spec, table);
  const std::size_t entries = table.size();
  std::vector<ExprValues> values;
  for (const Expr& c : loc.coeffs) {
    values.push_back(evaluate_on_table(spec, loc.vars, c, table));
    for (auto f : values.back().fault)
      if (f) return std::nullopt;
  }
  std::vector<std::size_t> failing;
  for (std::size_t e = 0; e < entries; ++e)
    for (std::size_t k = 0; k < loc.coeffs.size(); ++k)
      if (values[k].values[e] != sigma[k][e]) {
        failing.push_back(e);
        break;
      }
  if (failing.empty()) return loc;

  std::vector<Expr> denominators;
  for (const Node* node : topological_order(loc.coeffs))
    if (node->op == Op::Quotient) denominators.emplace_back(node->kids[1]);

  // candidate key columns: the locator's variables plus the primary syndromes
  std::vector<Variable> vars = loc.vars;
  for (int e : spec.defining_set()) {
    if (std::none_of(vars.begin(), vars.end(), [&](const Variable& v) { return v.exponent == e; }))
      vars.push_back({"x" + std::to_string(e), e});
  }
  const std::size_t var_count = vars.size();
  std::vector<std::vector<Element>> var_values(var_count);
  for (std::size_t v = 0; v < var_count; ++v)
    var_values[v] = evaluate_on_table(spec, vars, Expr::var(static_cast<int>(v)), table).values;

  std::vector<std::vector<std::size_t>> key_sets;
  for (std::size_t a = 0; a < var_count; ++a) {
    key_sets.push_back({a});
    for (std::size_t b = a + 1; b < var_count; ++b) {
      key_sets.push_back({a, b});
      for (std::size_t c = b + 1; c < var_count; ++c) key_sets.push_back({a, b, c});
    }
  }

  for (const Expr& den : denominators) {
    const ExprValues dv = evaluate_on_table(spec, loc.vars, den, table);
    if (std::any_of(dv.fault.begin(), dv.fault.end(), [](auto f) { return f != 0; })) continue;
    if (!std::all_of(failing.begin(), failing.end(), [&](std::size_t e) { return dv.values[e] == 0; })) continue;
    std::vector<std::size_t> zero_set;
    for (std::size_t e = 0; e < entries; ++e)
      if (dv.values[e] == 0) zero_set.push_back(e);

    // consistent key set with the smallest interpolation grid
    std::optional<std::vector<std::size_t>> best;
    double best_grid = 0;
    for (const auto& keys : key_sets) {
      std::map<std::vector<Element>, std::vector<Element>> seen;
      bool consistent = true;
      for (std::size_t e : zero_set) {
        std::vector<Element> key, delta;
        for (std::size_t v : keys) key.push_back(var_values[v][e]);
        for (std::size_t k = 0; k < loc.coeffs.size(); ++k) delta.push_back(values[k].values[e] ^ sigma[k][e]);
        auto [it, fresh] = seen.emplace(std::move(key), delta);
        if (!fresh && it->second != delta) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      double grid = 1;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::set<Element> distinct;
        for (const auto& [key, d] : seen) distinct.insert(key[i]);
        grid *= static_cast<double>(distinct.size());
      }
      if (!best || grid < best_grid) {
        best = keys;
        best_grid = grid;
      }
    }
    if (!best) continue;

    LocatorExpr out = loc;
    out.vars = vars;
    const Expr indicator = Expr::constant(1) + den.pow(spec.field().order());
    std::vector<Expr> key_exprs;
    for (std::size_t v : *best) key_exprs.push_back(Expr::var(static_cast<int>(v)));
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
      auto table_k = std::make_shared<LookupTable>();
      table_k->arity = static_cast<int>(best->size());
      for (std::size_t e : zero_set) {
        const Element delta = values[k].values[e] ^ sigma[k][e];
        if (!delta) continue;
        std::vector<Element> key;
        for (std::size_t v : *best) key.push_back(var_values[v][e]);
        table_k->values.emplace(std::move(key), delta);
      }
      if (table_k->values.empty()) continue;
      out.coeffs[k] = out.coeffs[k] + indicator * Expr::lookup(key_exprs, std::move(table_k));
    }
    // drop unused appended variables
    while (out.vars.size() > loc.vars.size() &&
           std::none_of(best->begin(), best->end(), [&](std::size_t v) { return v == out.vars.size() - 1; }))
      out.vars.pop_back();
    out.family = loc.family + "+patch";
    if (verify_locator(spec, out, table).ok()) return out;
  }
  return std::nullopt;
}

BuildResult build_locator(const CodeSpec& spec, const SyndromeTable& table, const BuildOptions& opts) {
  BuildResult out;
  out.classification = classify(spec);
  std::vector<const FamilyMatch*> order;
  for (const auto& mt : out.classification.matches)
    if (mt.tag != "t2-lambda") order.push_back(&mt);
  for (const auto& mt : out.classification.matches)
    if (mt.tag == "t2-lambda") order.push_back(&mt);
  for (const FamilyMatch* mt : order) {
    try {
      LocatorExpr loc = construct(spec, *mt, table, opts.data_dir);
      VerifyReport rep = verify_locator(spec, loc, table);
      if (rep.ok()) {
        out.locator = std::move(loc);
        out.source = mt->tag;
        out.verify = std::move(rep);
        return out;
      }
      out.notes.push_back(mt->tag + ": " + std::to_string(rep.failure_count) + " of " + std::to_string(rep.total) +
                          " table entries disagree with the oracle");
    } catch (const Error& e) {
      out.notes.push_back(mt->tag + ": " + e.what());
    }
  }
  if (opts.allow_patch) {
    for (const FamilyMatch* mt : order) {
      for (const FamilyMatch& variant : parameter_variants(spec, *mt)) {
        try {
          LocatorExpr loc = construct(spec, variant, table, opts.data_dir);
          if (auto patched = patch_locator(spec, loc, table)) {
            out.locator = std::move(*patched);
            out.source = mt->tag + "+patch";
            out.verify = verify_locator(spec, out.locator, table);
            std::string params;
            for (const auto& [k, v] : variant.params) params += " " + k + "=" + std::to_string(v);
            out.notes.push_back(mt->tag + " patched on the zero set of a denominator" + params);
            return out;
          }
        } catch (const Error&) {
        }
      }
    }
  }
  if (!opts.allow_synth_fallback) throw Error("no verified family locator for " + spec.label());
  out.locator = synthesize_locator(spec, table);
  out.source = "synth";
  out.verify = verify_locator(spec, out.locator, table);
  return out;
}

}  // namespace gelp
