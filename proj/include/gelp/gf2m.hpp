#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gelp {

using Element = std::uint32_t;

namespace simd {
struct Kernels;
struct FieldParams {
  int m = 0;
  std::uint32_t poly = 0;     // full reduction polynomial including x^m
  std::uint64_t barrett = 0;  // floor(x^(2m) / poly)
};
}  // namespace simd

// Lexicographically least primitive polynomial of degree m, as a bit mask.
std::uint32_t primitive_polynomial(int m);

// Immutable GF(2^m) context, 2 <= m <= 24. Cheap to copy.
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 24;

  explicit Field(int m);
  Field(int m, const simd::Kernels& kernels);

  int m() const { return params_.m; }
  std::uint32_t reduction_polynomial() const { return params_.poly; }
  std::uint32_t order() const { return order_; }  // 2^m - 1
  std::uint32_t size() const { return order_ + 1; }
  Element generator() const { return 2; }
  const simd::FieldParams& params() const { return params_; }
  const simd::Kernels& kernels() const { return *kernels_; }

  static Element add(Element a, Element b) { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element sqr(Element a) const { return mul(a, a); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t e) const;
  Element pow_u(Element a, std::uint64_t e) const;
  Element frobenius(Element a, int k) const;  // a^(2^k)

  // Primitive n-th root of unity g^((2^m-1)/n); throws unless n | 2^m-1.
  Element nth_root(std::uint64_t n) const;

  void mul_batch(std::span<const Element> a, std::span<const Element> b, std::span<Element> out) const;

 private:
  struct Tables {
    std::vector<Element> exp;
    std::vector<std::uint32_t> log;
  };
  simd::FieldParams params_;
  std::uint32_t order_ = 0;
  const simd::Kernels* kernels_ = nullptr;
  std::shared_ptr<const Tables> tables_;
};

// Multiplicative order of 2 modulo n (smallest m with n | 2^m - 1); n odd, n >= 3.
int splitting_degree(std::uint64_t n);

// a^-1 mod modulus; throws when gcd(a, modulus) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus);

std::int64_t mod_floor(std::int64_t a, std::int64_t modulus);

}  // namespace gelp
