#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gelp/code.hpp"
#include "gelp/expr.hpp"
#include "gelp/synth.hpp"

namespace gelp {

struct FamilyMatch {
  std::string tag;  // e.g. "t2-sl", "t3-consecutive", "t2-exceptional(a)"
  std::map<std::string, std::int64_t> params;
  std::string note;
};

struct Classification {
  std::string family;  // first match, or "unclassified"
  std::vector<FamilyMatch> matches;
};

// Matching uses the complete defining set; named t=2 exceptional codes are reported before generic families.
Classification classify(const CodeSpec& spec);

// ---- t = 2 ----

LocatorExpr t2_bch(const CodeSpec& spec);

struct BorderedLocator {
  LocatorExpr locator;  // b = b_star * wh / ovwh
  Expr b_star;
  Expr wh;
  Expr ovwh;
};

// l = 2^v + 1; b_star is synthesized from the weight-2 slice of `table`.
BorderedLocator t2_lambda(const CodeSpec& spec, std::uint64_t l, const SyndromeTable& table);
LocatorExpr t2_sl(const CodeSpec& spec, std::int64_t l, std::int64_t s);
BorderedLocator t2_one_case(const CodeSpec& spec, std::int64_t l);
// Only i = 0 is constructed.
LocatorExpr t2_power(const CodeSpec& spec, int i, int j);
// Length 51, defining set {0,1,5}.
LocatorExpr t2_exceptional_e(const CodeSpec& spec);
LocatorExpr t2_exceptional(const CodeSpec& spec, char which);

// 1 + x0 over a single variable bound to the syndrome of 0.
Expr parity_border(std::vector<Variable>& vars);

// ---- t = 3 ----

LocatorExpr t3_bch(const CodeSpec& spec);
LocatorExpr t3_consecutive(const CodeSpec& spec, std::int64_t i);
LocatorExpr t3_powers(const CodeSpec& spec, int i, int j);
LocatorExpr t3_139(const CodeSpec& spec);

// Transcribed entries for 21:{0,1,3,7}, 51:{1,3,9} and 55:{0,1}; the last one reads data files.
LocatorExpr load_table_entry(const CodeSpec& spec, const std::string& data_dir = GELP_DATA_DIR);

struct DataFileInfo {
  std::string name;
  std::string sha256;
};
const std::vector<DataFileInfo>& data_files();

// ---- orchestration ----

struct BuildOptions {
  std::string data_dir = GELP_DATA_DIR;
  bool allow_patch = true;
  bool allow_synth_fallback = true;
};

struct BuildResult {
  LocatorExpr locator;
  Classification classification;
  std::string source;  // tag of the family actually used, or "synth"
  VerifyReport verify;
  std::vector<std::string> notes;  // rejected candidates and why
};

// Adds (1 + W^(2^m-1)) * Lookup(keys) to the coefficients, where W is a denominator of `loc` vanishing on every
// entry where `loc` disagrees with the table; nullopt when no denominator and key set of at most two variables fit.
std::optional<LocatorExpr> patch_locator(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table);

// Tries each match in order and keeps the first one that verifies against the table; then tries patching each match,
// then falls back to synthesis.
BuildResult build_locator(const CodeSpec& spec, const SyndromeTable& table, const BuildOptions& opts = {});

// Constructs the locator for one match without verification.
LocatorExpr construct(const CodeSpec& spec, const FamilyMatch& match, const SyndromeTable& table,
                      const std::string& data_dir = GELP_DATA_DIR);

// ---- catalog listing ----

struct CatalogEntry {
  std::string code;   // "n:i1,i2"
  int t = 0;
  std::string group;  // which listing the entry comes from
};
const std::vector<CatalogEntry>& catalog_entries();
// Listed codes that cannot be instantiated as written, with the reason.
const std::vector<std::pair<std::string, std::string>>& catalog_skipped();

}  // namespace gelp
