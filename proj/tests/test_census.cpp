#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cd1lab/cd1.hpp"
#include "cd1lab/census.hpp"
#include "cd1lab/zoo.hpp"
#include "doctest.h"

using namespace cd1lab;

TEST_CASE("automorphism group sizes of well-known groups") {
  CHECK(automorphisms(cyclic_group(1)).size() == 1);
  CHECK(automorphisms(cyclic_group(12)).size() == 4);
  CHECK(automorphisms(klein_four()).size() == 6);
  CHECK(automorphisms(quaternion8()).size() == 24);
  CHECK(automorphisms(dihedral8()).size() == 8);
  CHECK(automorphisms(dihedral_group(3)).size() == 6);
  CHECK(automorphisms(cyclic_group(27)).size() == 18);
  // GL(3,2) acting on C2^3
  Group c2cubed = direct_product(
      direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  CHECK(automorphisms(c2cubed).size() == 168);
  // the exponent-3 group of order 27: |Aut| = 432
  CHECK(automorphisms(order27_groups()[3]).size() == 432);

  // each table is a homomorphism fixing the identity
  Group q8 = quaternion8();
  for (const auto& f : automorphisms(q8)) {
    CHECK(f[0] == 0);
    for (uint32_t x = 0; x < q8.order(); ++x)
      for (uint32_t y = 0; y < q8.order(); ++y)
        CHECK(f[q8.mul(x, y)] == q8.mul(f[x], f[y]));
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(isomorphic(dihedral_group(3), dihedral_group(3)));
  CHECK_FALSE(isomorphic(dihedral8(), quaternion8()));
  CHECK_FALSE(isomorphic(cyclic_group(8),
                         direct_product(cyclic_group(4), cyclic_group(2))));
  CHECK(isomorphic(direct_product(cyclic_group(4), cyclic_group(2)),
                   direct_product(cyclic_group(2), cyclic_group(4))));
  CHECK(isomorphic(direct_product(cyclic_group(3), cyclic_group(4)),
                   cyclic_group(12)));
  // same order, same class count, different structure
  CHECK_FALSE(isomorphic(cyclic_group(16),
                         direct_product(cyclic_group(8), cyclic_group(2))));
  CHECK_FALSE(isomorphic(dihedral_group(6), affine_line_q(4)));
}

TEST_CASE("dedupe keeps one representative per type") {
  std::vector<Group> pile;
  pile.push_back(dihedral8());
  pile.push_back(quaternion8());
  pile.push_back(extraspecial_2group(1, '+'));  // another D8
  pile.push_back(extraspecial_2group(1, '-'));  // another Q8
  pile.push_back(cyclic_group(8));
  CHECK(dedupe_groups(pile).size() == 3);
}

TEST_CASE("index-2 extension steps") {
  // C2 -> {C4, V4}
  auto ord4 = dedupe_groups(extensions_by_c2(cyclic_group(2)));
  CHECK(ord4.size() == 2);
  // C4 -> {C8, C4xC2, D8, Q8}; the missing order-8 group C2^3 extends V4 only
  auto from_c4 = dedupe_groups(extensions_by_c2(cyclic_group(4)));
  CHECK(from_c4.size() == 4);
  bool saw_q8 = false, saw_c8 = false;
  for (const Group& g : from_c4) {
    CHECK(g.order() == 8);
    if (isomorphic(g, quaternion8())) saw_q8 = true;
    if (isomorphic(g, cyclic_group(8))) saw_c8 = true;
  }
  CHECK(saw_q8);
  CHECK(saw_c8);
}

TEST_CASE("two-group census counts match the classification") {
  CHECK(two_group_census(1).size() == 1);
  CHECK(two_group_census(2).size() == 2);
  CHECK(two_group_census(3).size() == 5);
  CHECK(two_group_census(4).size() == 14);
  CHECK_THROWS_AS(two_group_census(6), std::invalid_argument);
}

TEST_CASE("order-32 census finds exactly seven single-difference groups") {
  auto groups = two_group_census(5);
  REQUIRE(groups.size() == 51);
  int cd1 = 0, extraspecial = 0, nonextra_central = 0;
  for (const Group& g : groups) {
    CharTable t = character_table(g);
    auto c = detect_cd1_columns(g, t);
    if (!c) continue;
    ++cd1;
    CHECK(all_pass(verify_certificate(g, t, *c)));
    // every order-32 example is of central type: b = -a, center of order 2
    CHECK(c->b_k == -(long long)c->a_k);
    CHECK(classify_extreme(*c) == Extreme::CentralType);
    Subgroup z = center(g);
    CHECK(z.order() == 2);
    if (derived_subgroup(g).members == z.members)
      ++extraspecial;
    else
      ++nonextra_central;
  }
  CHECK(cd1 == 7);
  CHECK(extraspecial == 2);
  CHECK(nonextra_central == 5);
}

TEST_CASE("order-54 census and its two single-difference groups") {
  auto groups = order54_census();
  CHECK(groups.size() == 15);
  std::vector<uint64_t> sylow_exponents;
  for (const Group& g : groups) {
    REQUIRE(g.order() == 54);
    CharTable t = character_table(g);
    auto c = detect_cd1_columns(g, t);
    if (!c) continue;
    CHECK(c->a_k == 6);
    CHECK(c->b_k == -3);
    CHECK(c->p == 3);
    CHECK(c->N_order == 3);
    CHECK(all_pass(verify_certificate(g, t, *c)));
    CHECK(classify_extreme(*c) == Extreme::None);
    CHECK(center(g).order() == 1);
    Subgroup syl = sylow_subgroup(g, 3);
    CHECK(syl.order() == 27);
    CHECK(is_normal(g, syl));
    uint64_t e = 1;
    for (uint32_t x : syl.members) e = std::max(e, g.element_order(x));
    sylow_exponents.push_back(e);
  }
  std::sort(sylow_exponents.begin(), sylow_exponents.end());
  // one witness over each nonabelian order-27 group
  CHECK(sylow_exponents == std::vector<uint64_t>{3, 9});
}

TEST_CASE("center-inverting doubles of the order-27 groups") {
  auto o27 = order27_groups();
  // the exponent-3 and exponent-9 nonabelian groups both double to a
  // single-difference group of order 54
  for (std::size_t i : {3, 4}) {
    auto doubles = center_inverted_doubles(o27[i]);
    CHECK(!doubles.empty());
    bool found = false;
    for (const Group& g : doubles) {
      CHECK(g.order() == 54);
      CharTable t = character_table(g);
      if (detect_cd1_columns(g, t)) found = true;
    }
    CHECK(found);
  }
  // doubling the cyclic group gives the dihedral group (inversion is the
  // only center-inverting involution)
  auto dc = center_inverted_doubles(cyclic_group(9));
  REQUIRE(dc.size() == 1);
  CHECK(isomorphic(dc[0], dihedral_group(9)));
}
