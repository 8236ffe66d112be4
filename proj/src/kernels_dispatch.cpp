#include "cd1lab/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace cd1lab::kern {

#if CD1LAB_HAVE_AVX2_TU
const Kernels* avx2_impl_table();  // defined in the -mavx2 TU
#endif

bool avx2_available() {
#if CD1LAB_HAVE_AVX2_TU && defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels* avx2() {
#if CD1LAB_HAVE_AVX2_TU
  if (avx2_available()) return avx2_impl_table();
#endif
  return nullptr;
}

static const Kernels& select() {
  const char* want = std::getenv("CD1LAB_KERNEL");
  if (want != nullptr) {
    if (std::strcmp(want, "scalar") == 0) return scalar();
    if (std::strcmp(want, "avx2") == 0) {
      const Kernels* k = avx2();
      if (k == nullptr)
        throw std::runtime_error("CD1LAB_KERNEL=avx2 but AVX2 is unavailable");
      return *k;
    }
    throw std::runtime_error(std::string("unknown CD1LAB_KERNEL value: ") + want);
  }
  const Kernels* k = avx2();
  return k != nullptr ? *k : scalar();
}

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace cd1lab::kern
