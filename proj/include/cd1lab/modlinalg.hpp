#pragma once
#include <cstdint>
#include <vector>

namespace cd1lab {
namespace modp {

// All moduli here are odd primes below 2^25, so products of reduced values
// stay far from u64 overflow.
inline uint64_t add(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t m) { return a * b % m; }
uint64_t pow(uint64_t b, uint64_t e, uint64_t m);
uint64_t inv(uint64_t a, uint64_t m);  // m prime, a != 0

}  // namespace modp

// Dense matrix over F_m, row-major.
struct MatFp {
  uint32_t rows = 0, cols = 0;
  uint64_t m = 0;
  std::vector<uint64_t> a;

  MatFp() = default;
  MatFp(uint32_t r, uint32_t c, uint64_t mod)
      : rows(r), cols(c), m(mod), a(std::size_t(r) * c, 0) {}
  uint64_t& at(uint32_t i, uint32_t j) { return a[std::size_t(i) * cols + j]; }
  uint64_t at(uint32_t i, uint32_t j) const {
    return a[std::size_t(i) * cols + j];
  }
  uint64_t* row(uint32_t i) { return a.data() + std::size_t(i) * cols; }
  const uint64_t* row(uint32_t i) const {
    return a.data() + std::size_t(i) * cols;
  }

  static MatFp identity(uint32_t n, uint64_t m);
  MatFp mul(const MatFp& o) const;
  std::vector<uint64_t> apply(const std::vector<uint64_t>& v) const;  // A v
};

uint64_t det(MatFp a);                                    // destroys copy
std::vector<std::vector<uint64_t>> kernel_basis(MatFp a); // right kernel
// One solution of A x = b, or empty if inconsistent.
std::vector<uint64_t> solve(MatFp a, std::vector<uint64_t> b);

// Polynomials over F_m: coefficient vectors, constant term first, no
// trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<uint64_t>;
Poly poly_trim(Poly p);
Poly poly_sub(const Poly& a, const Poly& b, uint64_t m);
Poly poly_mul(const Poly& a, const Poly& b, uint64_t m);
Poly poly_rem(Poly a, const Poly& b, uint64_t m);
Poly poly_gcd(Poly a, Poly b, uint64_t m);  // monic result
Poly poly_deriv(const Poly& a, uint64_t m);
// base^e modulo the polynomial f (and the prime m)
Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t m);

// Characteristic polynomial of a square matrix, by interpolating
// det(A - x I) at rows+1 points (requires m > rows, always true here).
Poly charpoly(const MatFp& a);

// All roots in F_m of a polynomial known to split into distinct linear
// factors after squarefree reduction. Deterministic: fixed-seed splitting,
// sorted output.
std::vector<uint64_t> distinct_roots(Poly f, uint64_t m);

// Smallest prime l with l = 1 (mod e) and l > min_exclusive. Throws
// std::runtime_error if none exists below cap.
uint64_t find_prime_one_mod(uint64_t e, uint64_t min_exclusive, uint64_t cap);
uint64_t smallest_primitive_root(uint64_t l);

}  // namespace cd1lab
