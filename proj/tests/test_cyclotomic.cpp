#include <stdexcept>
#include <vector>

#include "cd1lab/cyclotomic.hpp"
#include "doctest.h"

using namespace cd1lab;

namespace {
// z^a + z^(a+1) + ... + z^b at level e
Cyclo root_sum(uint32_t e, uint64_t a, uint64_t b) {
  Cyclo s = Cyclo::zero(e);
  for (uint64_t k = a; k <= b; ++k) s += Cyclo::root(e, k);
  return s;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  using P = std::vector<long long>;
  CHECK(cyclotomic_polynomial(1) == P{-1, 1});
  CHECK(cyclotomic_polynomial(2) == P{1, 1});
  CHECK(cyclotomic_polynomial(3) == P{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == P{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == P{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == P{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);  // phi(105) = 48
}

TEST_CASE("roots of unity satisfy their defining relations") {
  for (uint32_t e : {2, 3, 4, 5, 6, 8, 9, 12, 15, 660}) {
    Cyclo z = Cyclo::root(e, 1);
    Cyclo p = Cyclo::integer(e, 1);
    for (uint32_t k = 1; k <= e; ++k) {
      p = p * z;
      CHECK(p == Cyclo::root(e, k % e));
    }
    CHECK(p == Cyclo::integer(e, 1));  // z^e = 1
    CHECK(root_sum(e, 0, e - 1).is_zero());
  }
}

TEST_CASE("i squares to minus one") {
  Cyclo i = Cyclo::root(4, 1);
  CHECK(i * i == Cyclo::integer(4, -1));
  CHECK((i * i * i) == i.conjugate());
}

TEST_CASE("conjugation fixes rationals and inverts roots") {
  for (uint32_t e : {3, 5, 8, 12}) {
    for (uint64_t k = 0; k < e; ++k)
      CHECK(Cyclo::root(e, k).conjugate() == Cyclo::root(e, (e - k) % e));
    CHECK(Cyclo::integer(e, -7).conjugate() == Cyclo::integer(e, -7));
    // z * conj(z) = 1
    Cyclo z = Cyclo::root(e, 1);
    CHECK(z * z.conjugate() == Cyclo::integer(e, 1));
  }
}

TEST_CASE("rationality predicate") {
  CHECK(Cyclo::integer(12, 5).is_rational());
  CHECK(Cyclo::integer(12, 5).rational_value() == 5);
  CHECK_FALSE(Cyclo::root(12, 1).is_rational());
  CHECK_THROWS_AS(Cyclo::root(12, 1).rational_value(), std::logic_error);
  // 2 cos(2 pi / 6) = z6 + z6^-1 = 1
  Cyclo c = Cyclo::root(6, 1) + Cyclo::root(6, 5);
  CHECK(c.is_rational());
  CHECK(c.rational_value() == 1);
}

TEST_CASE("quadratic Gauss sum squares to the prime") {
  for (uint32_t p : {5, 13}) {  // primes = 1 mod 4, so the sum squares to +p
    Cyclo g = Cyclo::zero(p);
    for (uint64_t k = 0; k < p; ++k) g += Cyclo::root(p, k * k % p);
    CHECK(g * g == Cyclo::integer(p, p));
  }
  // p = 3 mod 4: square is -p
  Cyclo g = Cyclo::zero(7);
  for (uint64_t k = 0; k < 7; ++k) g += Cyclo::root(7, k * k % 7);
  CHECK(g * g == Cyclo::integer(7, -7));
}

TEST_CASE("exact division by integers") {
  Cyclo v = Cyclo::root(8, 1) * 6 + Cyclo::integer(8, 10);
  auto half = divide_exact(v, 2);
  REQUIRE(half.has_value());
  CHECK(*half + *half == v);
  CHECK_FALSE(divide_exact(v, 4).has_value());
  CHECK(divide_exact(Cyclo::zero(8), 5) == Cyclo::zero(8));
}

TEST_CASE("coefficient order and printing") {
  CHECK(compare_coeffs(Cyclo::integer(4, 2), Cyclo::integer(4, 1)) > 0);
  CHECK(compare_coeffs(Cyclo::root(4, 1), Cyclo::root(4, 3)) > 0);  // i vs -i
  CHECK(compare_coeffs(Cyclo::root(4, 1), Cyclo::root(4, 1)) == 0);
  CHECK(Cyclo::zero(6).to_string() == "0");
  CHECK(Cyclo::integer(6, -3).to_string() == "-3");
  CHECK(Cyclo::root(4, 1).to_string() == "z");
}

TEST_CASE("level mismatch is rejected") {
  CHECK_THROWS_AS(Cyclo::root(4, 1) + Cyclo::root(6, 1), std::logic_error);
}
