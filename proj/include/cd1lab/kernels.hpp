#pragma once
#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the permutation and modular linear
// algebra layers. Scalar versions are the reference semantics; the AVX2
// variants must agree bit-for-bit (equivalence-tested) and are selected at
// runtime. Contracts:
//   compose_u32: dst[i] = a[b[i]], all values < n, dst not aliased with a.
//   mod_*: modulus 1 < m < 2^25, all inputs already reduced mod m.
//   mod_dot: n <= 8192 so the lazily-reduced accumulator cannot overflow.
namespace cd1lab::kern {

struct Kernels {
  void (*compose_u32)(uint32_t* dst, const uint32_t* a, const uint32_t* b,
                      std::size_t n);
  void (*mod_axpy)(uint64_t* y, const uint64_t* x, uint64_t c, std::size_t n,
                   uint64_t m);
  uint64_t (*mod_dot)(const uint64_t* a, const uint64_t* b, std::size_t n,
                      uint64_t m);
  void (*mod_scale)(uint64_t* y, uint64_t c, std::size_t n, uint64_t m);
  const char* name;
};

const Kernels& scalar();
const Kernels* avx2();    // nullptr when the CPU or build lacks AVX2
bool avx2_available();

// Runtime-selected implementation. Honors CD1LAB_KERNEL=scalar|avx2
// (read once); defaults to the best available.
const Kernels& active();

inline constexpr uint64_t max_modulus = uint64_t(1) << 25;

}  // namespace cd1lab::kern
