#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cd1lab {

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<uint64_t, uint32_t>> factor(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    uint32_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// n = p^k with k >= 1
inline std::optional<std::pair<uint64_t, uint32_t>> prime_power(uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factor(n);
  if (f.size() != 1) return std::nullopt;
  return f[0];
}

inline uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, k] : factor(n)) r = r / p * (p - 1);
  return r;
}

inline uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::optional<uint64_t> exact_sqrt(uint64_t n) {
  uint64_t r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace cd1lab
