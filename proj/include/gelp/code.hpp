#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gelp/gf2m.hpp"

namespace gelp {

// Received or transmitted word, bit i is the coefficient c_i.
using BitWord = std::vector<std::uint8_t>;

class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;
  static BinaryPolynomial from_bits(std::span<const std::uint8_t> bits);
  static BinaryPolynomial monomial(std::size_t degree);

  int degree() const;  // -1 for zero
  bool coefficient(std::size_t i) const;
  void set(std::size_t i, bool v);
  bool is_zero() const { return degree() < 0; }
  BitWord to_bits(std::size_t length) const;
  std::string to_string() const;

  friend BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b);

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

std::vector<int> cyclotomic_coset(int n, int i);
std::vector<int> complete_defining_set(int n, std::span<const int> defining_set);

class CodeSpec {
 public:
  // Throws on even n, out-of-range indices, or when an explicit t is not verified.
  static CodeSpec make(int n, std::vector<int> defining_set, std::optional<int> t = std::nullopt);
  // "n:i1,i2,..."
  static CodeSpec parse(std::string_view text, std::optional<int> t = std::nullopt);

  int n() const { return n_; }
  int t() const { return t_; }
  int r() const { return static_cast<int>(defining_set_.size()); }
  const std::vector<int>& defining_set() const { return defining_set_; }
  const std::vector<int>& complete_set() const { return complete_set_; }
  bool in_complete_set(std::int64_t exponent) const;
  const Field& field() const { return field_; }
  Element alpha() const { return alpha_; }
  Element alpha_pow(std::int64_t k) const { return alpha_pows_[static_cast<std::size_t>(mod_floor(k, n_))]; }
  std::string label() const;

  // Syndrome of a single error at position l for defining-set entry j.
  Element column(int l, int j) const { return columns_[static_cast<std::size_t>(l) * defining_set_.size() + j]; }
  std::vector<Element> syndromes_of_positions(std::span<const int> positions) const;

  // Express the syndrome of `exponent` as (j, k) with x_exponent = s_j^(2^k).
  struct Derivation {
    int index;
    int frobenius;
  };
  std::optional<Derivation> derive(std::int64_t exponent) const;

 private:
  int n_ = 0;
  int t_ = 0;
  std::vector<int> defining_set_;
  std::vector<int> complete_set_;
  std::vector<bool> membership_;
  Field field_{2};
  Element alpha_ = 0;
  std::vector<Element> alpha_pows_;
  std::vector<Element> columns_;
};

// Calls fn(positions) for every pattern of weight 0..max_weight in weight-then-lexicographic order.
void for_each_pattern(int n, int max_weight, const std::function<void(std::span<const int>)>& fn);
std::uint64_t pattern_count(int n, int max_weight);
std::uint64_t binomial(int n, int k);

bool verify_capability(const CodeSpec& spec, int t);
bool is_s2ec(const CodeSpec& spec);
// Largest t <= cap for which the syndrome map is injective.
int compute_capability(const CodeSpec& spec, int cap = 3);

BinaryPolynomial generator_polynomial(const CodeSpec& spec);
BitWord encode(const CodeSpec& spec, std::span<const std::uint8_t> message);
int dimension(const CodeSpec& spec);

BitWord parse_word(std::string_view text, int n);
std::string format_word(std::span<const std::uint8_t> word);

struct ElementVectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept;
};

}  // namespace gelp
