#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gelp/gf2m.hpp"

namespace gelp::simd {

struct Kernels {
  std::string_view name;
  Element (*mul)(const FieldParams&, Element, Element);
  void (*mul_batch)(const FieldParams&, const Element*, const Element*, Element*, std::size_t);
};

const Kernels& scalar_kernels();

// Variants usable on this CPU, scalar first.
std::vector<const Kernels*> available_kernels();

// Best available variant; GELP_KERNELS=<name> in the environment pins one.
const Kernels& active_kernels();

const Kernels* find_kernels(std::string_view name);

std::uint64_t barrett_constant(int m, std::uint32_t poly);

}  // namespace gelp::simd
