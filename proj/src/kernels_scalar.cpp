#include "cd1lab/kernels.hpp"

namespace cd1lab::kern {

static void compose_u32_scalar(uint32_t* dst, const uint32_t* a,
                               const uint32_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[b[i]];
}

static void mod_axpy_scalar(uint64_t* y, const uint64_t* x, uint64_t c,
                            std::size_t n, uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + c * x[i]) % m;
}

static uint64_t mod_dot_scalar(const uint64_t* a, const uint64_t* b,
                               std::size_t n, uint64_t m) {
  // products < 2^50, n <= 2^13: the sum stays below 2^63
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc % m;
}

static void mod_scale_scalar(uint64_t* y, uint64_t c, std::size_t n,
                             uint64_t m) {
  for (std::size_t i = 0; i < n; ++i) y[i] = (c * y[i]) % m;
}

const Kernels& scalar() {
  static const Kernels k{compose_u32_scalar, mod_axpy_scalar, mod_dot_scalar,
                         mod_scale_scalar, "scalar"};
  return k;
}

}  // namespace cd1lab::kern
