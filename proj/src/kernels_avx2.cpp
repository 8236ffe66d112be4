// AVX2 kernel variants. Compiled with -mavx2 in this TU only; callers reach
// them through the runtime dispatch table, never directly.
#include "cd1lab/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace cd1lab::kern {
namespace {

void compose_u32_avx2(uint32_t* dst, const uint32_t* a, const uint32_t* b,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i got = _mm256_i32gather_epi32(reinterpret_cast<const int*>(a), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), got);
  }
  for (; i < n; ++i) dst[i] = a[b[i]];
}

// exact u64 <-> double conversions for values < 2^52
inline __m256d u64_to_pd(__m256i v) {
  const __m256d magic = _mm256_set1_pd(0x1p52);
  return _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(v, _mm256_castpd_si256(magic))),
      magic);
}
inline __m256i pd_to_u64(__m256d v) {
  const __m256d magic = _mm256_set1_pd(0x1p52);
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(v, magic)),
                          _mm256_castpd_si256(magic));
}

// low-32 x low-32 -> full 64 products; both operands < 2^32
inline __m256i mul_u32x32(__m256i x, __m256i y) {
  return _mm256_mul_epu32(x, y);
}

// full 64-bit q*m where q < 2^51 and m < 2^25
inline __m256i mul_qm(__m256i q, __m256i m) {
  __m256i lo = _mm256_mul_epu32(q, m);
  __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(q, 32), m);
  return _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32));
}

// t mod m for 4 u64 lanes, t < 2^51, 1 < m < 2^25. Barrett in doubles:
// the quotient estimate is off by at most one, fixed up both ways.
inline __m256i reduce_u64(__m256i t, __m256i mv, __m256d inv_m) {
  __m256d qd = _mm256_floor_pd(_mm256_mul_pd(u64_to_pd(t), inv_m));
  __m256i q = pd_to_u64(qd);
  __m256i r = _mm256_sub_epi64(t, mul_qm(q, mv));
  // r may sit in [-m, 2m); both fixups are branch-free
  __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
  r = _mm256_add_epi64(r, _mm256_and_si256(neg, mv));
  __m256i ge = _mm256_cmpgt_epi64(r, _mm256_sub_epi64(mv, _mm256_set1_epi64x(1)));
  r = _mm256_sub_epi64(r, _mm256_and_si256(ge, mv));
  return r;
}

void mod_axpy_avx2(uint64_t* y, const uint64_t* x, uint64_t c, std::size_t n,
                   uint64_t m) {
  const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256d inv_m = _mm256_set1_pd(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_add_epi64(yv, mul_u32x32(xv, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        reduce_u64(t, mv, inv_m));
  }
  for (; i < n; ++i) y[i] = (y[i] + c * x[i]) % m;
}

uint64_t mod_dot_avx2(const uint64_t* a, const uint64_t* b, std::size_t n,
                      uint64_t m) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, mul_u32x32(av, bv));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += a[i] * b[i];
  return s % m;
}

void mod_scale_avx2(uint64_t* y, uint64_t c, std::size_t n, uint64_t m) {
  const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256d inv_m = _mm256_set1_pd(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        reduce_u64(mul_u32x32(yv, cv), mv, inv_m));
  }
  for (; i < n; ++i) y[i] = (c * y[i]) % m;
}

}  // namespace

const Kernels* avx2_impl_table() {
  static const Kernels k{compose_u32_avx2, mod_axpy_avx2, mod_dot_avx2,
                         mod_scale_avx2, "avx2"};
  return &k;
}

}  // namespace cd1lab::kern
#endif  // __AVX2__
