#include "gelp/gf2m.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gelp/error.hpp"
#include "gelp/kernels.hpp"

namespace gelp {

namespace {

constexpr std::array<std::uint32_t, 25> kPrimitive = {
    0,        0,        0x7,      0xb,      0x13,     0x25,      0x43,
    0x83,     0x11d,    0x211,    0x409,    0x805,    0x1053,    0x201b,
    0x402b,   0x8003,   0x1002d,  0x20009,  0x40027,  0x80027,   0x100009,
    0x200005, 0x400003, 0x800021, 0x100001b};

constexpr int kTableLimit = 16;

}  // namespace

std::uint32_t primitive_polynomial(int m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree)
    throw std::out_of_range("field degree must be in [2, 24], got " + std::to_string(m));
  return kPrimitive[static_cast<std::size_t>(m)];
}

Field::Field(int m) : Field(m, simd::active_kernels()) {}

Field::Field(int m, const simd::Kernels& kernels) : kernels_(&kernels) {
  params_.m = m;
  params_.poly = primitive_polynomial(m);
  params_.barrett = simd::barrett_constant(m, params_.poly);
  order_ = (std::uint32_t{1} << m) - 1;
  if (m <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * static_cast<std::size_t>(order_));
    t->log.assign(order_ + 1, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
      t->exp[i] = x;
      t->exp[i + order_] = x;
      t->log[x] = i;
      x = simd::scalar_kernels().mul(params_, x, 2);
    }
    tables_ = std::move(t);
  }
}

Element Field::mul(Element a, Element b) const {
  if (tables_) {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  return kernels_->mul(params_, a, b);
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (tables_) return tables_->exp[(order_ - tables_->log[a]) % order_];
  return pow_u(a, order_ - 1);
}

Element Field::pow_u(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  e %= order_;
  if (tables_) return tables_->exp[static_cast<std::uint32_t>((static_cast<std::uint64_t>(tables_->log[a]) * e) % order_)];
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Element Field::pow(Element a, std::int64_t e) const {
  if (e >= 0) return pow_u(a, static_cast<std::uint64_t>(e));
  return pow_u(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
}

Element Field::frobenius(Element a, int k) const {
  for (int i = 0; i < k % params_.m; ++i) a = mul(a, a);
  return a;
}

Element Field::nth_root(std::uint64_t n) const {
  if (n == 0 || order_ % n != 0)
    throw std::invalid_argument(std::to_string(n) + " does not divide 2^" + std::to_string(params_.m) + "-1");
  return pow_u(generator(), order_ / n);
}

void Field::mul_batch(std::span<const Element> a, std::span<const Element> b, std::span<Element> out) const {
  if (a.size() != b.size() || out.size() != a.size()) throw std::invalid_argument("mul_batch size mismatch");
  kernels_->mul_batch(params_, a.data(), b.data(), out.data(), a.size());
}

int splitting_degree(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("code length must be odd and >= 3, got " + std::to_string(n));
  std::uint64_t x = 2 % n;
  int m = 1;
  while (x != 1) {
    x = (x * 2) % n;
    ++m;
  }
  return m;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t modulus) {
  std::int64_t r = a % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::int64_t r0 = mod_floor(a, modulus), r1 = modulus;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1)
    throw std::invalid_argument("gcd(" + std::to_string(a) + ", " + std::to_string(modulus) + ") != 1");
  return mod_floor(s0, modulus);
}

}  // namespace gelp
