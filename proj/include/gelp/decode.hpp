#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gelp/code.hpp"
#include "gelp/expr.hpp"
#include "gelp/synth.hpp"

namespace gelp {

enum class DecodeStatus { Clean, Corrected, DetectedUncorrectable };
std::string to_string(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Clean;
  std::vector<int> positions;  // flipped positions, ascending
  BitWord corrected;
  std::string diagnostic;
  bool operator==(const DecodeResult& o) const {
    return status == o.status && positions == o.positions && corrected == o.corrected;
  }
};

std::vector<Element> compute_syndromes(const CodeSpec& spec, std::span<const std::uint8_t> word);

// Coefficients a_(t-1)..a_0 of L(s, z); throws EvaluationFault.
std::vector<Element> evaluate_locator(const LocatorExpr& loc, const CodeSpec& spec, std::span<const Element> syndromes);

struct ChienResult {
  std::vector<int> positions;  // l with L(alpha^l) = 0
  int zero_multiplicity = 0;
  int root_count() const { return static_cast<int>(positions.size()) + zero_multiplicity; }
};
ChienResult chien_roots(std::span<const Element> coeffs, const CodeSpec& spec);

// Pre-bound locator for repeated decoding.
class Decoder {
 public:
  Decoder(const CodeSpec& spec, LocatorExpr loc);
  DecodeResult decode(std::span<const std::uint8_t> word) const;
  // Finishes decoding from already evaluated coefficients (nullopt means an evaluation fault).
  DecodeResult finish(std::span<const std::uint8_t> word, std::span<const Element> syndromes,
                      const std::optional<std::vector<Element>>& coeffs) const;
  const LocatorExpr& locator() const { return loc_; }
  const Program& program() const { return program_; }
  const VariableBinding& binding() const { return binding_; }

 private:
  const CodeSpec* spec_;
  LocatorExpr loc_;
  Program program_;
  VariableBinding binding_;
};

DecodeResult decode(const CodeSpec& spec, const LocatorExpr& loc, std::span<const std::uint8_t> word);
DecodeResult oracle_decode(const CodeSpec& spec, const SyndromeTable& table, std::span<const std::uint8_t> word);

struct Counterexample {
  std::vector<int> error_positions;
  DecodeResult got;
  DecodeResult expected;
};

struct EquivalenceStats {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;
  bool ok() const { return failed == 0 && total > 0; }
};

// decode == oracle_decode on every table pattern added to `codeword` (the zero word by default).
EquivalenceStats exhaustive_equivalence(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table,
                                        unsigned jobs = 1, std::span<const std::uint8_t> codeword = {});

}  // namespace gelp
