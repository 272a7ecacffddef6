#include <array>
#include <fstream>
#include <sstream>

#include "gelp/catalog.hpp"
#include "gelp/error.hpp"
#include "gelp/sha256.hpp"

namespace gelp {

namespace {

Expr one() { return Expr::constant(1); }

Expr monomial(std::span<const Expr> vars, std::span<const int> exps) {
  std::vector<Expr> f;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) f.push_back(vars[i].pow(static_cast<std::uint64_t>(exps[i])));
  return Expr::product(std::move(f));
}

void require_code(const CodeSpec& spec, int n, std::vector<int> set) {
  if (spec.n() != n || spec.complete_set() != complete_defining_set(n, set))
    throw HypothesisError("table entry does not apply to " + spec.label());
  if (spec.t() != 3) throw HypothesisError("table entry needs t = 3 on " + spec.label());
}

LocatorExpr entry_21(const CodeSpec& spec) {
  require_code(spec, 21, {0, 1, 3, 7});
  LocatorExpr loc;
  loc.t = 3;
  loc.family = "t3-table-entry";
  loc.vars = {{"x1", 1}, {"x2", 3}, {"x3", 7}, {"x4", 0}};
  const std::array<Expr, 4> x{Expr::var(0), Expr::var(1), Expr::var(2), Expr::var(3)};
  // exponents of x1, x2, x3, x4
  static constexpr int kTerms[][4] = {
      {2, 0, 0, 1},  {2, 0, 3, 0},  {0, 3, 2, 0},  {3, 2, 2, 0},  {9, 0, 2, 0},  {28, 3, 1, 0},
      {10, 2, 1, 0}, {13, 1, 1, 0}, {37, 0, 1, 0}, {44, 7, 0, 0}, {23, 7, 0, 0}, {47, 6, 0, 0},
      {5, 6, 0, 0},  {50, 5, 0, 0}, {53, 4, 0, 0}, {32, 4, 0, 0}, {56, 3, 0, 0}, {35, 3, 0, 0},
      {59, 2, 0, 0}, {38, 2, 0, 0}, {41, 1, 0, 0}, {20, 1, 0, 0}, {23, 0, 0, 0}, {2, 0, 0, 0}};
  std::vector<Expr> terms;
  for (const auto& t : kTerms) terms.push_back(monomial(x, t));
  const Expr b = Expr::sum(std::move(terms));
  loc.coeffs = {x[0], b, Expr::sum({x[0].pow(3), x[1], x[0] * b})};
  return loc;
}

LocatorExpr entry_51(const CodeSpec& spec) {
  require_code(spec, 51, {1, 3, 9});
  LocatorExpr loc;
  loc.t = 3;
  loc.family = "t3-table-entry";
  loc.vars = {{"x1", 1}, {"x2", 3}, {"x3", 9}, {"x4", 13}, {"x5", 15}};
  const Expr x1 = Expr::var(0), x2 = Expr::var(1), x3 = Expr::var(2), x4 = Expr::var(3), x5 = Expr::var(4);
  const Expr q1 = Expr::sum({x3 * x1.pow(9), x3 * x2 * x1.pow(6), x2.pow(3) * x1.pow(9), x3.pow(2),
                             x3 * x2.pow(2) * x1.pow(3), x2.pow(4) * x1.pow(6), x3 * x2.pow(3), x5 * x1.pow(3),
                             x5 * x2, x2.pow(6)});
  const Expr q2 = Expr::sum({x1.pow(16), x2.pow(4) * x1.pow(4), x4 * x2, x2.pow(5) * x1});
  const Expr s = x1.pow(3) + x2;
  const Expr inner = (x3.pow(2) + x5 * x3) / (q1 * x1) +
                     ((x3 + x2.pow(3)) / (x5.pow(4) + x2.pow(3)) + one()) * (x1.pow(2) / s + (x4 + x2.pow(4) * x1) / q2);
  const Expr b = x1.pow(2) + s * inner;
  loc.coeffs = {x1, b, Expr::sum({x1.pow(3), x2, x1 * b})};
  return loc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Lines of "name^exp name^exp ..."; names map to expressions.
Expr parse_monomials(const std::string& text, const std::vector<std::pair<std::string, Expr>>& names,
                     const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::vector<Expr> terms;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<Expr> factors;
    while (ls >> tok) {
      const auto caret = tok.find('^');
      const std::string name = tok.substr(0, caret);
      std::uint64_t exp = 1;
      if (caret != std::string::npos) {
        try {
          exp = std::stoull(tok.substr(caret + 1));
        } catch (const std::exception&) {
          throw DataError(source + ":" + std::to_string(lineno) + ": bad exponent in '" + tok + "'");
        }
      }
      const Expr* base = nullptr;
      for (const auto& [nm, e] : names)
        if (nm == name) base = &e;
      if (!base) throw DataError(source + ":" + std::to_string(lineno) + ": unknown variable '" + name + "'");
      factors.push_back(exp == 0 ? one() : base->pow(exp));
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

LocatorExpr entry_55(const CodeSpec& spec, const std::string& data_dir) {
  require_code(spec, 55, {0, 1});
  LocatorExpr loc;
  loc.t = 3;
  loc.family = "t3-table-entry";
  loc.vars = {{"x1", 1}, {"x2", 0}};
  const Expr x1 = Expr::var(0), x2 = Expr::var(1);
  const std::vector<std::pair<std::string, Expr>> names{{"x1", x1}, {"x2", x2}, {"y1", x1.pow(55)}};
  std::vector<Expr> coeffs{x1};
  for (const auto& info : data_files()) {
    const std::string path = data_dir + "/" + info.name;
    const std::string text = read_file(path);
    if (sha256_hex(text) != info.sha256) throw DataError("checksum mismatch for " + path);
    coeffs.push_back(parse_monomials(text, names, info.name));
  }
  loc.coeffs = std::move(coeffs);
  return loc;
}

}  // namespace

const std::vector<DataFileInfo>& data_files() {
  static const std::vector<DataFileInfo> files{
      {"n55_b.txt", "31f02e394cb29c0a82f5c4a547f00ac806ddef38d0992166035cf5706e0ec13f"},
      {"n55_c.txt", "a05b413c9e69ffb29af003a4f352ec7753f083d244724f23e6a43dbbaeca63fb"}};
  return files;
}

LocatorExpr load_table_entry(const CodeSpec& spec, const std::string& data_dir) {
  if (spec.n() == 21) return entry_21(spec);
  if (spec.n() == 51) return entry_51(spec);
  if (spec.n() == 55) return entry_55(spec, data_dir);
  throw HypothesisError("no transcribed entry for " + spec.label());
}

}  // namespace gelp
