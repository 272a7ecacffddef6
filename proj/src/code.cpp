#include "gelp/code.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gelp/error.hpp"

namespace gelp {

// ---- BinaryPolynomial ----

BinaryPolynomial BinaryPolynomial::from_bits(std::span<const std::uint8_t> bits) {
  BinaryPolynomial p;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) p.set(i, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t degree) {
  BinaryPolynomial p;
  p.set(degree, true);
  return p;
}

int BinaryPolynomial::degree() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w]) return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(words_[w])));
  return -1;
}

bool BinaryPolynomial::coefficient(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

void BinaryPolynomial::set(std::size_t i, bool v) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!v) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  words_[w] = v ? (words_[w] | bit) : (words_[w] & ~bit);
  trim();
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitWord BinaryPolynomial::to_bits(std::size_t length) const {
  if (degree() >= static_cast<int>(length)) throw std::length_error("polynomial does not fit the word length");
  BitWord out(length, 0);
  for (std::size_t i = 0; i < length; ++i) out[i] = coefficient(i) ? 1 : 0;
  return out;
}

std::string BinaryPolynomial::to_string() const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(static_cast<std::size_t>(i))) continue;
    if (!s.empty()) s += " + ";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "x";
    else
      s += "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial r = a.words_.size() >= b.words_.size() ? a : b;
  const BinaryPolynomial& o = a.words_.size() >= b.words_.size() ? b : a;
  for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
  r.trim();
  return r;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial r;
  const int db = b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coefficient(static_cast<std::size_t>(i))) continue;
    for (int j = 0; j <= db; ++j)
      if (b.coefficient(static_cast<std::size_t>(j)))
        r.set(static_cast<std::size_t>(i + j), !r.coefficient(static_cast<std::size_t>(i + j)));
  }
  return r;
}

BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  const int db = b.degree();
  if (db < 0) throw std::domain_error("polynomial division by zero");
  BinaryPolynomial r = a;
  for (int d = r.degree(); d >= db; d = r.degree()) {
    for (int j = 0; j <= db; ++j)
      if (b.coefficient(static_cast<std::size_t>(j))) {
        const auto k = static_cast<std::size_t>(d - db + j);
        r.set(k, !r.coefficient(k));
      }
  }
  return r;
}

bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) { return a.words_ == b.words_; }

// ---- cosets ----

std::vector<int> cyclotomic_coset(int n, int i) {
  if (n < 1) throw std::invalid_argument("coset modulus must be positive");
  const int start = static_cast<int>(mod_floor(i, n));
  std::vector<int> out{start};
  for (int x = (2 * start) % n; x != start; x = (2 * x) % n) out.push_back(x);
  return out;
}

std::vector<int> complete_defining_set(int n, std::span<const int> defining_set) {
  std::set<int> all;
  for (int i : defining_set)
    for (int x : cyclotomic_coset(n, i)) all.insert(x);
  return {all.begin(), all.end()};
}

// ---- CodeSpec ----

CodeSpec CodeSpec::make(int n, std::vector<int> defining_set, std::optional<int> t) {
  const int m = splitting_degree(static_cast<std::uint64_t>(n));
  if (m > Field::kMaxDegree)
    throw std::invalid_argument("length " + std::to_string(n) + " needs GF(2^" + std::to_string(m) + "), above the supported range");
  if (defining_set.empty()) throw std::invalid_argument("defining set must not be empty");
  for (int i : defining_set)
    if (i < 0 || i >= n) throw std::invalid_argument("defining-set index " + std::to_string(i) + " outside [0, n)");

  CodeSpec c;
  c.n_ = n;
  c.defining_set_ = std::move(defining_set);
  c.complete_set_ = complete_defining_set(n, c.defining_set_);
  c.membership_.assign(static_cast<std::size_t>(n), false);
  for (int x : c.complete_set_) c.membership_[static_cast<std::size_t>(x)] = true;
  c.field_ = Field(m);
  c.alpha_ = c.field_.nth_root(static_cast<std::uint64_t>(n));
  c.alpha_pows_.resize(static_cast<std::size_t>(n));
  Element x = 1;
  for (int k = 0; k < n; ++k) {
    c.alpha_pows_[static_cast<std::size_t>(k)] = x;
    x = c.field_.mul(x, c.alpha_);
  }
  const std::size_t r = c.defining_set_.size();
  c.columns_.resize(static_cast<std::size_t>(n) * r);
  for (int l = 0; l < n; ++l)
    for (std::size_t j = 0; j < r; ++j)
      c.columns_[static_cast<std::size_t>(l) * r + j] =
          c.alpha_pow(static_cast<std::int64_t>(l) * c.defining_set_[j]);

  if (t) {
    if (*t < 0) throw std::invalid_argument("t must be non-negative");
    if (!verify_capability(c, *t))
      throw CapabilityError("syndrome map of " + c.label() + " is not injective on weight <= " + std::to_string(*t));
    c.t_ = *t;
  } else {
    c.t_ = compute_capability(c);
  }
  return c;
}

CodeSpec CodeSpec::parse(std::string_view text, std::optional<int> t) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("code must look like n:i1,i2,...");
  auto to_int = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
  };
  const int n = to_int(text.substr(0, colon));
  std::vector<int> set;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    set.push_back(to_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return make(n, std::move(set), t);
}

bool CodeSpec::in_complete_set(std::int64_t exponent) const {
  return membership_[static_cast<std::size_t>(mod_floor(exponent, n_))];
}

std::string CodeSpec::label() const {
  std::string s = std::to_string(n_) + ":";
  for (std::size_t j = 0; j < defining_set_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(defining_set_[j]);
  }
  return s;
}

std::vector<Element> CodeSpec::syndromes_of_positions(std::span<const int> positions) const {
  std::vector<Element> s(defining_set_.size(), 0);
  for (int l : positions)
    for (std::size_t j = 0; j < s.size(); ++j) s[j] ^= column(l, static_cast<int>(j));
  return s;
}

std::optional<CodeSpec::Derivation> CodeSpec::derive(std::int64_t exponent) const {
  const auto e = static_cast<int>(mod_floor(exponent, n_));
  for (std::size_t j = 0; j < defining_set_.size(); ++j) {
    const int base = defining_set_[j];
    if (e == 0 || base == 0) {
      if (e == 0 && base == 0) return Derivation{static_cast<int>(j), 0};
      continue;
    }
    std::int64_t x = base;
    for (int k = 0; k < field_.m(); ++k) {
      if (x == e) return Derivation{static_cast<int>(j), k};
      x = (2 * x) % n_;
    }
  }
  return std::nullopt;
}

// ---- enumeration ----

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t pattern_count(int n, int max_weight) {
  std::uint64_t total = 0;
  for (int w = 0; w <= max_weight; ++w) total += binomial(n, w);
  return total;
}

void for_each_pattern(int n, int max_weight, const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> pos;
  for (int w = 0; w <= std::min(max_weight, n); ++w) {
    pos.resize(static_cast<std::size_t>(w));
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      fn(pos);
      int i = w - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - w + i) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < w; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::size_t ElementVectorHash::operator()(const std::vector<Element>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Element e : v) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

bool injective(const CodeSpec& spec, int min_weight, int max_weight) {
  std::unordered_set<std::vector<Element>, ElementVectorHash> seen;
  bool ok = true;
  for_each_pattern(spec.n(), max_weight, [&](std::span<const int> pos) {
    if (!ok || static_cast<int>(pos.size()) < min_weight) return;
    if (!seen.insert(spec.syndromes_of_positions(pos)).second) ok = false;
  });
  return ok;
}

}  // namespace

bool verify_capability(const CodeSpec& spec, int t) { return injective(spec, 0, t); }

bool is_s2ec(const CodeSpec& spec) { return injective(spec, 2, 2); }

int compute_capability(const CodeSpec& spec, int cap) {
  int t = 0;
  while (t < cap && verify_capability(spec, t + 1)) ++t;
  return t;
}

// ---- encoding ----

BinaryPolynomial generator_polynomial(const CodeSpec& spec) {
  const Field& f = spec.field();
  std::vector<Element> g{1};
  for (int i : spec.complete_set()) {
    const Element root = spec.alpha_pow(i);
    std::vector<Element> next(g.size() + 1, 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      next[k + 1] ^= g[k];
      next[k] ^= f.mul(g[k], root);
    }
    g = std::move(next);
  }
  BinaryPolynomial out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] > 1) throw Error("generator polynomial has a coefficient outside GF(2)");
    out.set(k, g[k] == 1);
  }
  return out;
}

int dimension(const CodeSpec& spec) { return spec.n() - static_cast<int>(spec.complete_set().size()); }

BitWord encode(const CodeSpec& spec, std::span<const std::uint8_t> message) {
  if (static_cast<int>(message.size()) != dimension(spec))
    throw std::invalid_argument("message length must equal the code dimension " + std::to_string(dimension(spec)));
  return (BinaryPolynomial::from_bits(message) * generator_polynomial(spec)).to_bits(static_cast<std::size_t>(spec.n()));
}

BitWord parse_word(std::string_view text, int n) {
  BitWord w(static_cast<std::size_t>(n), 0);
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::size_t bit = 0;
    for (std::size_t i = text.size(); i-- > 2; bit += 4) {
      const char ch = text[i];
      int v = 0;
      if (ch >= '0' && ch <= '9')
        v = ch - '0';
      else if (ch >= 'a' && ch <= 'f')
        v = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F')
        v = ch - 'A' + 10;
      else
        throw std::invalid_argument("bad hex digit in word");
      for (int b = 0; b < 4; ++b)
        if ((v >> b) & 1) {
          if (bit + static_cast<std::size_t>(b) >= w.size()) throw std::invalid_argument("hex word has bits beyond length " + std::to_string(n));
          w[bit + static_cast<std::size_t>(b)] = 1;
        }
    }
    return w;
  }
  if (static_cast<int>(text.size()) != n)
    throw std::invalid_argument("word has " + std::to_string(text.size()) + " bits, code length is " + std::to_string(n));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("word must be a 0/1 string or 0x-prefixed hex");
    w[i] = text[i] == '1';
  }
  return w;
}

std::string format_word(std::span<const std::uint8_t> word) {
  std::string s;
  s.reserve(word.size());
  for (auto b : word) s += b ? '1' : '0';
  return s;
}

}  // namespace gelp
