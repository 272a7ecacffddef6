#include <algorithm>
#include <stdexcept>

#include "gelp/expr.hpp"
#include "json.hpp"

namespace gelp {

using Json = nlohmann::ordered_json;

namespace {

Json node_to_json(const Node& n, std::span<const Variable> vars) {
  auto kids = [&] {
    Json arr = Json::array();
    for (const auto& k : n.kids) arr.push_back(node_to_json(*k, vars));
    return arr;
  };
  switch (n.op) {
    case Op::Var:
      return Json{{"var", vars[static_cast<std::size_t>(n.var)].name}};
    case Op::Const:
      return Json{{"const", n.value}};
    case Op::Pow:
      return Json{{"pow", Json::array({node_to_json(*n.kids[0], vars), n.exponent})}};
    case Op::Sum:
      return Json{{"sum", kids()}};
    case Op::Product:
      return Json{{"product", kids()}};
    case Op::Quotient:
      return Json{{"quotient", kids()}};
    case Op::Lookup: {
      std::vector<std::vector<Element>> rows;
      for (const auto& [key, value] : n.table->values) {
        auto row = key;
        row.push_back(value);
        rows.push_back(std::move(row));
      }
      std::sort(rows.begin(), rows.end());
      return Json{{"lookup", Json{{"keys", kids()}, {"table", rows}}}};
    }
  }
  throw std::logic_error("unknown node kind");
}

Expr node_from_json(const Json& j, const LocatorExpr& loc) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("expression node must be a one-key object");
  const std::string kind = j.begin().key();
  const Json& body = j.begin().value();
  auto kids = [&](const Json& arr) {
    std::vector<Expr> out;
    for (const auto& k : arr) out.push_back(node_from_json(k, loc));
    return out;
  };
  if (kind == "var") {
    const int idx = loc.variable(body.get<std::string>());
    if (idx < 0) throw std::invalid_argument("unknown variable " + body.get<std::string>());
    return Expr::var(idx);
  }
  if (kind == "const") return Expr::constant(body.get<Element>());
  if (kind == "pow") {
    Expr base = node_from_json(body.at(0), loc);
    const auto k = body.at(1).get<std::uint64_t>();
    return base.pow(k);
  }
  if (kind == "sum") return Expr::sum(kids(body));
  if (kind == "product") return Expr::product(kids(body));
  if (kind == "quotient") {
    auto k = kids(body);
    if (k.size() != 2) throw std::invalid_argument("quotient needs two operands");
    return Expr::quotient(k[0], k[1]);
  }
  if (kind == "lookup") {
    auto keys = kids(body.at("keys"));
    auto table = std::make_shared<LookupTable>();
    table->arity = static_cast<int>(keys.size());
    for (const auto& row : body.at("table")) {
      auto v = row.get<std::vector<Element>>();
      if (v.size() != keys.size() + 1) throw std::invalid_argument("lookup row has wrong width");
      const Element value = v.back();
      v.pop_back();
      table->values.emplace(std::move(v), value);
    }
    return Expr::lookup(std::move(keys), std::move(table));
  }
  throw std::invalid_argument("unknown expression node kind " + kind);
}

}  // namespace

std::string locator_to_json(const LocatorExpr& loc, int indent) {
  Json j;
  j["t"] = loc.t;
  if (!loc.family.empty()) j["family"] = loc.family;
  Json vars = Json::object();
  for (const auto& v : loc.vars) vars[v.name] = v.exponent;
  j["vars"] = vars;
  Json coeffs = Json::array();
  for (const auto& c : loc.coeffs) coeffs.push_back(node_to_json(c.node(), loc.vars));
  j["coeffs"] = coeffs;
  return j.dump(indent);
}

LocatorExpr locator_from_json(std::string_view text) {
  const Json j = Json::parse(text);
  LocatorExpr loc;
  loc.t = j.at("t").get<int>();
  if (j.contains("family")) loc.family = j.at("family").get<std::string>();
  for (const auto& [name, exp] : j.at("vars").items()) loc.vars.push_back({name, exp.get<int>()});
  for (const auto& c : j.at("coeffs")) loc.coeffs.push_back(node_from_json(c, loc));
  if (static_cast<int>(loc.coeffs.size()) != loc.t) throw std::invalid_argument("coefficient count must equal t");
  return loc;
}

}  // namespace gelp
