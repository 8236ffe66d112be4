#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cd1lab {

// Element of Z[z] where z = exp(2*pi*i/e), stored on the integral power
// basis 1, z, ..., z^(phi(e)-1) after reduction modulo the e-th cyclotomic
// polynomial. Equality of coefficient vectors is equality of values, so the
// representation is canonical. Arithmetic requires both operands to carry
// the same level e (character tables fix e = exponent of the group).
class Cyclo {
 public:
  Cyclo() : level_(1), c_{0} {}
  static Cyclo zero(uint32_t e);
  static Cyclo integer(uint32_t e, long long v);
  static Cyclo root(uint32_t e, uint64_t k);  // z^k

  uint32_t level() const { return level_; }
  const std::vector<long long>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  long long rational_value() const;  // throws std::logic_error if irrational

  Cyclo conjugate() const;  // complex conjugate: z^j -> z^(e-j)

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, long long s);
  friend Cyclo operator*(long long s, Cyclo a) { return std::move(a) * s; }

  bool operator==(const Cyclo&) const = default;

  std::string to_string() const;  // "0", "-3", "z^2 - z + 1"

  friend std::optional<Cyclo> divide_exact(const Cyclo& v, long long d);

 private:
  Cyclo(uint32_t level, std::vector<long long> c)
      : level_(level), c_(std::move(c)) {}

  uint32_t level_;
  std::vector<long long> c_;  // size phi(level_)
};

// All coefficients divisible by d -> the quotient; otherwise nullopt.
std::optional<Cyclo> divide_exact(const Cyclo& v, long long d);

// Lexicographic comparison of coefficient vectors (levels must match).
int compare_coeffs(const Cyclo& a, const Cyclo& b);

// Coefficients of the e-th cyclotomic polynomial, ascending degree, monic.
std::vector<long long> cyclotomic_polynomial(uint32_t e);

}  // namespace cd1lab
