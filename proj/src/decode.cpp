#include "gelp/decode.hpp"

#include <algorithm>

#include "gelp/error.hpp"
#include "gelp/parallel.hpp"

namespace gelp {

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Clean:
      return "clean";
    case DecodeStatus::Corrected:
      return "corrected";
    case DecodeStatus::DetectedUncorrectable:
      return "detected-uncorrectable";
  }
  return "?";
}

std::vector<Element> compute_syndromes(const CodeSpec& spec, std::span<const std::uint8_t> word) {
  if (static_cast<int>(word.size()) != spec.n())
    throw std::invalid_argument("word length " + std::to_string(word.size()) + " differs from n = " + std::to_string(spec.n()));
  std::vector<Element> s(static_cast<std::size_t>(spec.r()), 0);
  for (int l = 0; l < spec.n(); ++l)
    if (word[static_cast<std::size_t>(l)])
      for (int j = 0; j < spec.r(); ++j) s[static_cast<std::size_t>(j)] ^= spec.column(l, j);
  return s;
}

std::vector<Element> evaluate_locator(const LocatorExpr& loc, const CodeSpec& spec, std::span<const Element> syndromes) {
  const VariableBinding binding(loc, spec);
  return Program(loc.coeffs).evaluate(spec.field(), binding.bind(syndromes));
}

ChienResult chien_roots(std::span<const Element> coeffs, const CodeSpec& spec) {
  const Field& f = spec.field();
  const auto n = static_cast<std::size_t>(spec.n());
  ChienResult out;
  for (std::size_t k = coeffs.size(); k-- > 0 && coeffs[k] == 0;) ++out.zero_multiplicity;
  std::vector<Element> points(n), acc(n, 1), tmp(n);
  for (std::size_t l = 0; l < n; ++l) points[l] = spec.alpha_pow(static_cast<std::int64_t>(l));
  for (Element c : coeffs) {
    f.mul_batch(acc, points, tmp);
    for (std::size_t l = 0; l < n; ++l) acc[l] = tmp[l] ^ c;
  }
  for (std::size_t l = 0; l < n; ++l)
    if (acc[l] == 0) out.positions.push_back(static_cast<int>(l));
  return out;
}

Decoder::Decoder(const CodeSpec& spec, LocatorExpr loc)
    : spec_(&spec), loc_(std::move(loc)), program_(loc_.coeffs), binding_(loc_, spec) {
  if (loc_.t != spec.t()) throw std::invalid_argument("locator degree differs from the code's t");
}

DecodeResult Decoder::finish(std::span<const std::uint8_t> word, std::span<const Element> syndromes,
                             const std::optional<std::vector<Element>>& coeffs) const {
  DecodeResult res;
  res.corrected.assign(word.begin(), word.end());
  if (std::all_of(syndromes.begin(), syndromes.end(), [](Element e) { return e == 0; })) return res;
  res.status = DecodeStatus::DetectedUncorrectable;
  if (!coeffs) {
    res.diagnostic = "evaluation fault";
    return res;
  }
  const ChienResult roots = chien_roots(*coeffs, *spec_);
  if (roots.root_count() != loc_.t) {
    res.diagnostic = "root deficit: " + std::to_string(roots.root_count()) + " of " + std::to_string(loc_.t);
    return res;
  }
  BitWord fixed(word.begin(), word.end());
  for (int l : roots.positions) fixed[static_cast<std::size_t>(l)] ^= 1;
  const auto check = compute_syndromes(*spec_, fixed);
  if (std::any_of(check.begin(), check.end(), [](Element e) { return e != 0; })) {
    res.diagnostic = "correction does not yield a codeword";
    return res;
  }
  res.status = DecodeStatus::Corrected;
  res.positions = roots.positions;
  res.corrected = std::move(fixed);
  return res;
}

DecodeResult Decoder::decode(std::span<const std::uint8_t> word) const {
  const auto s = compute_syndromes(*spec_, word);
  std::optional<std::vector<Element>> coeffs;
  if (std::any_of(s.begin(), s.end(), [](Element e) { return e != 0; })) {
    try {
      coeffs = program_.evaluate(spec_->field(), binding_.bind(s));
    } catch (const EvaluationFault&) {
    }
  }
  return finish(word, s, coeffs);
}

DecodeResult decode(const CodeSpec& spec, const LocatorExpr& loc, std::span<const std::uint8_t> word) {
  return Decoder(spec, loc).decode(word);
}

DecodeResult oracle_decode(const CodeSpec& spec, const SyndromeTable& table, std::span<const std::uint8_t> word) {
  const auto s = compute_syndromes(spec, word);
  DecodeResult res;
  res.corrected.assign(word.begin(), word.end());
  const auto hit = table.find(s);
  if (!hit) {
    res.status = DecodeStatus::DetectedUncorrectable;
    res.diagnostic = "syndrome not in table";
    return res;
  }
  if (table.weight(*hit) == 0) return res;
  res.status = DecodeStatus::Corrected;
  for (int l : table.positions(*hit)) {
    res.positions.push_back(l);
    res.corrected[static_cast<std::size_t>(l)] ^= 1;
  }
  return res;
}

EquivalenceStats exhaustive_equivalence(const CodeSpec& spec, const LocatorExpr& loc, const SyndromeTable& table,
                                        unsigned jobs, std::span<const std::uint8_t> codeword) {
  const Decoder dec(spec, loc);
  const std::size_t count = table.size();
  const auto batch = dec.program().evaluate_batch(spec.field(), dec.binding().bind_columns(table.flat_syndromes(), count));
  BitWord base(static_cast<std::size_t>(spec.n()), 0);
  if (!codeword.empty()) {
    if (static_cast<int>(codeword.size()) != spec.n()) throw std::invalid_argument("codeword length differs from n");
    base.assign(codeword.begin(), codeword.end());
  }
  std::vector<std::uint8_t> good(count, 0);
  parallel_chunks(count, jobs, [&](std::size_t b, std::size_t e) {
    std::vector<Element> coeffs(static_cast<std::size_t>(loc.t));
    for (std::size_t i = b; i < e; ++i) {
      BitWord word = base;
      for (int l : table.positions(i)) word[static_cast<std::size_t>(l)] ^= 1;
      std::optional<std::vector<Element>> c;
      if (!batch.fault[i]) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = batch.roots[k][i];
        c = coeffs;
      }
      const auto s = compute_syndromes(spec, word);
      good[i] = dec.finish(word, s, c) == oracle_decode(spec, table, word);
    }
  });
  EquivalenceStats st;
  st.total = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (good[i]) {
      ++st.passed;
      continue;
    }
    ++st.failed;
    if (!st.first_failure) {
      BitWord word = base;
      for (int l : table.positions(i)) word[static_cast<std::size_t>(l)] ^= 1;
      Counterexample cx;
      cx.error_positions.assign(table.positions(i).begin(), table.positions(i).end());
      cx.got = dec.decode(word);
      cx.expected = oracle_decode(spec, table, word);
      st.first_failure = std::move(cx);
    }
  }
  return st;
}

}  // namespace gelp
