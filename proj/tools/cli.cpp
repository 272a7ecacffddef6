#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gelp/catalog.hpp"
#include "gelp/decode.hpp"
#include "gelp/density.hpp"
#include "gelp/error.hpp"
#include "gelp/synth.hpp"

namespace gelp::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text, Csv };

struct RunConfig {
  std::string command;
  std::string code;
  std::optional<int> t;
  unsigned jobs = 1;
  Format format = Format::Json;
  std::string data_dir = GELP_DATA_DIR;
  std::size_t budget = kDefaultMonomialBudget;
  bool all_catalog = false;
  std::string word;
  std::string emit;
  double epsilon = 3.0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits = 1) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

CodeSpec parse_code(const RunConfig& cfg) {
  if (cfg.code.empty()) throw UsageError("--code is required");
  try {
    return CodeSpec::parse(cfg.code, cfg.t);
  } catch (const CapabilityError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --code: ") + e.what());
  }
}

struct Target {
  std::string code;
  std::optional<int> t;
  std::string group;
};

std::vector<Target> targets(const RunConfig& cfg) {
  std::vector<Target> out;
  if (cfg.all_catalog) {
    for (const auto& e : catalog_entries()) out.push_back({e.code, e.t, e.group});
  } else {
    if (cfg.code.empty()) throw UsageError("--code or --all-catalog is required");
    out.push_back({cfg.code, cfg.t, ""});
  }
  return out;
}

Json match_json(const FamilyMatch& m) {
  Json j;
  j["tag"] = m.tag;
  Json params = Json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  if (!m.note.empty()) j["note"] = m.note;
  return j;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const CodeSpec spec = parse_code(cfg);
  const Classification cls = classify(spec);
  if (cfg.format == Format::Text) {
    out << "code: " << spec.label() << "\n";
    out << "family: " << cls.family << "\n";
    out << "complete_set:";
    for (int e : spec.complete_set()) out << ' ' << e;
    out << "\nk: " << dimension(spec) << "\nt: " << spec.t() << "\n";
    for (const auto& m : cls.matches) {
      out << "match: " << m.tag;
      for (const auto& [k, v] : m.params) out << ' ' << k << '=' << v;
      if (!m.note.empty()) out << " (" << m.note << ")";
      out << "\n";
    }
    return kExitOk;
  }
  if (cfg.format == Format::Csv) {
    out << "code,n,k,t,family,matches\n";
    std::string tags;
    for (const auto& m : cls.matches) tags += (tags.empty() ? "" : ";") + m.tag;
    out << csv_field(spec.label()) << ',' << spec.n() << ',' << dimension(spec) << ',' << spec.t() << ','
        << csv_field(cls.family) << ',' << csv_field(tags) << "\n";
    return kExitOk;
  }
  Json j;
  j["code"] = spec.label();
  j["n"] = spec.n();
  j["defining_set"] = spec.defining_set();
  j["complete_set"] = spec.complete_set();
  j["k"] = dimension(spec);
  j["t"] = spec.t();
  j["s2ec"] = is_s2ec(spec);
  j["family"] = cls.family;
  Json matches = Json::array();
  for (const auto& m : cls.matches) matches.push_back(match_json(m));
  j["matches"] = matches;
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct Built {
  CodeSpec spec;
  SyndromeTable table;
  BuildResult result;
};

Built build_for(const std::string& code, std::optional<int> t, const RunConfig& cfg) {
  CodeSpec spec = CodeSpec::parse(code, t);
  SyndromeTable table = build_syndrome_table(spec, cfg.jobs);
  BuildOptions opts;
  opts.data_dir = cfg.data_dir;
  BuildResult result = build_locator(spec, table, opts);
  return {std::move(spec), std::move(table), std::move(result)};
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const CodeSpec checked = parse_code(cfg);
  const Built b = build_for(checked.label(), cfg.t, cfg);
  const std::string loc_json = locator_to_json(b.result.locator);
  if (!cfg.emit.empty()) {
    std::ofstream f(cfg.emit);
    if (!f) throw Error("cannot write " + cfg.emit);
    f << loc_json << "\n";
  }
  if (cfg.format == Format::Text) {
    out << "code: " << b.spec.label() << "\nsource: " << b.result.source << "\nverified: " << b.result.verify.passed
        << "/" << b.result.verify.total << "\n";
    for (const auto& n : b.result.notes) out << "note: " << n << "\n";
    out << "coefficients:\n";
    for (std::size_t k = 0; k < b.result.locator.coeffs.size(); ++k)
      out << "  a" << b.result.locator.t - 1 - static_cast<int>(k) << " = " << render(b.result.locator.coeffs[k], b.result.locator.vars)
          << "\n";
    return kExitOk;
  }
  Json j;
  j["code"] = b.spec.label();
  j["family"] = b.result.classification.family;
  j["source"] = b.result.source;
  j["verify"] = {{"total", b.result.verify.total}, {"passed", b.result.verify.passed}};
  j["notes"] = b.result.notes;
  j["locator"] = Json::parse(loc_json);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out) {
  const CodeSpec checked = parse_code(cfg);
  if (cfg.word.empty()) throw UsageError("--word is required");
  BitWord word;
  try {
    word = parse_word(cfg.word, checked.n());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Built b = build_for(checked.label(), cfg.t, cfg);
  const DecodeResult r = decode(b.spec, b.result.locator, word);
  if (cfg.format == Format::Text) {
    out << "status: " << to_string(r.status) << "\npositions:";
    for (int p : r.positions) out << ' ' << p;
    out << "\ncorrected: " << format_word(r.corrected) << "\n";
    if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << "\n";
    return kExitOk;
  }
  Json j;
  j["code"] = b.spec.label();
  j["status"] = to_string(r.status);
  j["positions"] = r.positions;
  j["corrected"] = format_word(r.corrected);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct VerifyRow {
  std::string code;
  int t = 0;
  std::string family;
  std::string source;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string error;
  bool ok() const { return error.empty() && failed == 0 && total > 0; }
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<VerifyRow> rows;
  for (const auto& tgt : targets(cfg)) {
    VerifyRow row;
    row.code = tgt.code;
    try {
      const Built b = build_for(tgt.code, tgt.t, cfg);
      row.code = b.spec.label();
      row.t = b.spec.t();
      row.family = b.result.classification.family;
      row.source = b.result.source;
      const EquivalenceStats st = exhaustive_equivalence(b.spec, b.result.locator, b.table, cfg.jobs);
      row.total = st.total;
      row.passed = st.passed;
      row.failed = st.failed;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok();

  if (cfg.format == Format::Csv) {
    out << "code,t,family,source,patterns,passed,failed,status\n";
    for (const auto& r : rows)
      out << csv_field(r.code) << ',' << r.t << ',' << csv_field(r.family) << ',' << csv_field(r.source) << ','
          << r.total << ',' << r.passed << ',' << r.failed << ',' << (r.ok() ? "pass" : "FAIL") << "\n";
  } else if (cfg.format == Format::Text) {
    for (const auto& r : rows) {
      out << (r.ok() ? "pass " : "FAIL ") << r.code << " t=" << r.t << " family=" << r.family << " source=" << r.source
          << " " << r.passed << "/" << r.total;
      if (!r.error.empty()) out << " error: " << r.error;
      out << "\n";
    }
    out << (all_ok ? "all " : "not all ") << rows.size() << " code(s) passed\n";
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["code"] = r.code;
      j["t"] = r.t;
      j["family"] = r.family;
      j["source"] = r.source;
      j["patterns"] = r.total;
      j["passed"] = r.passed;
      j["failed"] = r.failed;
      if (!r.error.empty()) j["error"] = r.error;
      j["ok"] = r.ok();
      arr.push_back(j);
    }
    out << Json{{"all_passed", all_ok}, {"codes", arr}}.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    std::string code;
    int n = 0;
    int t = 0;
    std::string source;
    DensityReport report;
    SparsityVerdict verdict;
    std::string error;
  };
  std::vector<Row> rows;
  for (const auto& tgt : targets(cfg)) {
    Row row;
    row.code = tgt.code;
    try {
      const Built b = build_for(tgt.code, tgt.t, cfg);
      row.code = b.spec.label();
      row.n = b.spec.n();
      row.t = b.spec.t();
      row.source = b.result.source;
      row.report = density_report(b.spec, b.result.locator, cfg.budget);
      row.verdict = sparsity_check(b.spec, row.report, cfg.epsilon);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  const auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  if (cfg.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["code"] = r.code;
      j["t"] = r.t;
      j["source"] = r.source;
      if (!r.error.empty()) {
        j["error"] = r.error;
        arr.push_back(j);
        continue;
      }
      Json coeffs = Json::array();
      for (const auto& c : r.report.coefficients) {
        if (!c.available) {
          coeffs.push_back(nullptr);
          continue;
        }
        coeffs.push_back({{"numerator_terms", c.numerator}, {"denominator_terms", c.denominator}, {"polynomial", c.polynomial}});
      }
      j["coefficients"] = coeffs;
      j["monomial_total"] = r.report.monomial_total ? Json(*r.report.monomial_total) : Json(nullptr);
      Json reps = Json::object();
      for (const auto& [name, d] : r.report.representations) reps[name] = d;
      j["representations"] = reps;
      j["functional_density_upper"] =
          r.report.functional_density_upper ? Json(*r.report.functional_density_upper) : Json(nullptr);
      j["sparse"] = r.verdict.sparse;
      j["sparsity_bound"] = r.verdict.bound;
      if (r.verdict.five_n_checked) j["within_five_n"] = r.verdict.within_five_n;
      j["eval_cost"] = {{"locator", r.report.cost.locator}, {"chien", r.report.cost.chien}, {"total", r.report.cost.total()}};
      j["notes"] = r.report.notes;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else {
    const char sep = cfg.format == Format::Csv ? ',' : ' ';
    out << "code" << sep << "t" << sep << "source" << sep << "monomial_total" << sep << "functional_density_upper" << sep
        << "representation" << sep << "sparse" << sep << "five_n" << sep << "eval_cost" << "\n";
    for (const auto& r : rows) {
      if (!r.error.empty()) {
        out << csv_field(r.code) << sep << r.t << sep << "error" << sep << csv_field(r.error) << "\n";
        continue;
      }
      const std::string five = !r.verdict.five_n_checked ? "n/a" : r.verdict.within_five_n ? "within" : "exceeds";
      out << csv_field(r.code) << sep << r.t << sep << csv_field(r.source) << sep << opt(r.report.monomial_total) << sep
          << opt(r.report.functional_density_upper) << sep
          << (r.report.best_representation.empty() ? "n/a" : r.report.best_representation) << sep
          << (r.verdict.sparse ? "yes" : "no") << sep << five << sep << fixed(r.report.cost.total()) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"one-step decoding of binary cyclic codes with general error locator polynomials", "gelp"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}, {"csv", Format::Csv}};

  const auto common = [&](CLI::App* sub, bool many) {
    sub->add_option("--code", cfg.code, "code as n:i1,i2,...");
    sub->add_option("--t", cfg.t, "error-correcting capability to verify instead of computing it")->check(CLI::Range(1, 3));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--format", cfg.format, "json, text or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--data-dir", cfg.data_dir, "directory holding the transcribed data files");
    sub->add_option("--budget", cfg.budget, "monomial budget for expansions");
    if (many) sub->add_flag("--all-catalog", cfg.all_catalog, "iterate over every catalog code");
  };
  auto* classify_cmd = app.add_subcommand("classify", "report the locator family of a code");
  common(classify_cmd, false);
  auto* build_cmd = app.add_subcommand("build", "construct and verify a locator");
  common(build_cmd, false);
  build_cmd->add_option("--emit", cfg.emit, "write the locator JSON to this file");
  auto* decode_cmd = app.add_subcommand("decode", "decode one received word");
  common(decode_cmd, false);
  decode_cmd->add_option("--word", cfg.word, "received word: 0/1 string c0..c(n-1) or 0x hex with bit i = c_i");
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive decode equivalence against the syndrome table");
  common(verify_cmd, true);
  auto* density_cmd = app.add_subcommand("density", "monomial counts and functional density");
  common(density_cmd, true);
  density_cmd->add_option("--epsilon", cfg.epsilon, "sparsity exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "build") return cmd_build(cfg, out);
    if (cfg.command == "decode") return cmd_decode(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "density") return cmd_density(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gelp::cli
