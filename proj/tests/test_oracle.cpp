#include <utility>
#include <vector>

#include "cd1lab/chartable.hpp"
#include "cd1lab/zoo.hpp"
#include "doctest.h"
#include "oracle_table.hpp"

using namespace cd1lab;

namespace {

std::vector<std::pair<std::string, Group>> small_corpus() {
  std::vector<std::pair<std::string, Group>> v;
  for (uint64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})
    v.emplace_back("c" + std::to_string(n), cyclic_group(n));
  v.emplace_back("v4", klein_four());
  v.emplace_back("s3", dihedral_group(3));
  v.emplace_back("d8", dihedral8());
  v.emplace_back("q8", quaternion8());
  v.emplace_back("d12", dihedral_group(6));
  v.emplace_back("a4", affine_line_q(4));
  v.emplace_back("f20", affine_line_q(5));
  v.emplace_back("s4", symmetric4());
  v.emplace_back("c3xc3", direct_product(cyclic_group(3), cyclic_group(3)));
  v.emplace_back("d8xc2", direct_product(dihedral8(), cyclic_group(2)));
  v.emplace_back("c2xc4", direct_product(cyclic_group(2), cyclic_group(4)));
  return v;
}

}  // namespace

TEST_CASE("independent sieve reproduces every small table row for row") {
  for (auto& [name, g] : small_corpus()) {
    CAPTURE(name);
    CharTable lib = character_table(g);
    CharTable alt = oracle::oracle_character_table(g);
    REQUIRE(lib.num_rows() == alt.num_rows());
    CHECK(lib.group_order == alt.group_order);
    CHECK(lib.exponent == alt.exponent);
    CHECK(lib.class_sizes == alt.class_sizes);
    CHECK(lib.class_orders == alt.class_orders);
    CHECK(lib.inverse_classes == alt.inverse_classes);
    for (uint32_t i = 0; i < lib.num_rows(); ++i) {
      CAPTURE(i);
      CHECK(lib.rows[i] == alt.rows[i]);
    }
  }
}

TEST_CASE("sieve output is itself orthonormal") {
  Group g = symmetric4();
  CharTable t = oracle::oracle_character_table(g);
  for (uint32_t i = 0; i < t.num_rows(); ++i)
    for (uint32_t j = 0; j <= i; ++j) {
      Cyclo v = inner_product(t, t.rows[i], t.rows[j]);
      CHECK(v == Cyclo::integer(t.exponent, i == j ? 1 : 0));
    }
}
