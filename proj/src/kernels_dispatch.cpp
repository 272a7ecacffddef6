#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gelp/kernels.hpp"

namespace gelp::simd {

#if defined(GELP_HAVE_X86_KERNELS)
namespace detail {
Element mul_clmul(const FieldParams&, Element, Element);
void mul_batch_clmul(const FieldParams&, const Element*, const Element*, Element*, std::size_t);
void mul_batch_avx2(const FieldParams&, const Element*, const Element*, Element*, std::size_t);
}  // namespace detail

namespace {
constexpr Kernels kClmul{"clmul", &detail::mul_clmul, &detail::mul_batch_clmul};
constexpr Kernels kAvx2{"avx2", &detail::mul_clmul, &detail::mul_batch_avx2};
}  // namespace
#endif

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&scalar_kernels()};
#if defined(GELP_HAVE_X86_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("pclmul")) {
    out.push_back(&kClmul);
    if (__builtin_cpu_supports("avx2")) out.push_back(&kAvx2);
  }
#endif
  return out;
}

const Kernels* find_kernels(std::string_view name) {
  for (const Kernels* k : available_kernels())
    if (k->name == name) return k;
  return nullptr;
}

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    if (const char* env = std::getenv("GELP_KERNELS")) {
      if (const Kernels* k = find_kernels(env)) return k;
      throw std::invalid_argument(std::string("unknown or unsupported kernel variant: ") + env);
    }
    return available_kernels().back();
  }();
  return *chosen;
}

}  // namespace gelp::simd
