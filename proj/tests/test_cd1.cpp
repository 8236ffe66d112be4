#include <set>
#include <stdexcept>

#include "cd1lab/cd1.hpp"
#include "cd1lab/zoo.hpp"
#include "doctest.h"

using namespace cd1lab;

namespace {

Certificate detect_both(const Group& g, const CharTable& t) {
  auto a = detect_cd1_columns(g, t);
  auto b = detect_cd1_vanishing(g, t);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->row_k == b->row_k);
  CHECK(a->col_b == b->col_b);
  CHECK(a->a_k == b->a_k);
  CHECK(a->b_k == b->b_k);
  return *a;
}

}  // namespace

TEST_CASE("certificate of the smallest example") {
  Group g = dihedral_group(3);
  CharTable t = character_table(g);
  Certificate c = detect_both(g, t);
  CHECK(c.group_order == 6);
  CHECK(c.a_k == 2);
  CHECK(c.b_k == -1);
  CHECK(c.p == 3);
  CHECK(c.n == 1);
  CHECK(c.t == 0);
  CHECK(c.N_order == 3);
  CHECK(c.b_class_size == 2);
  CHECK(t.degree(c.row_k) == c.a_k);

  auto checks = verify_certificate(g, t, c);
  CHECK(checks.size() >= 30);
  for (const auto& r : checks) {
    CAPTURE(r.id);
    CAPTURE(r.evidence);
    CHECK(r.pass);
  }
  CHECK(all_pass(checks));
  CHECK(classify_extreme(c) == Extreme::Frobenius);

  // ids are unique slugs
  std::set<std::string> ids;
  for (const auto& r : checks) CHECK(ids.insert(r.id).second);
  CHECK(ids.count("gagola-row-two-support") == 1);
  CHECK(ids.count("b-prime-power") == 1);
  CHECK(ids.count("order-formula") == 1);
  CHECK(ids.count("ls8-camina-pair") == 1);
}

TEST_CASE("central type certificates on the 2-groups") {
  for (Group g : {dihedral8(), quaternion8()}) {
    CharTable t = character_table(g);
    Certificate c = detect_both(g, t);
    CHECK(c.a_k == 2);
    CHECK(c.b_k == -2);
    CHECK(c.p == 2);
    CHECK(c.n == 1);
    CHECK(c.t == 1);
    CHECK(c.N_order == 2);
    CHECK(all_pass(verify_certificate(g, t, c)));
    CHECK(classify_extreme(c) == Extreme::CentralType);
  }
}

TEST_CASE("full affine lines give the Frobenius extreme") {
  for (uint64_t q : {4, 5, 7, 8, 9}) {
    CAPTURE(q);
    Group g = affine_line_q(q);
    CharTable t = character_table(g);
    Certificate c = detect_both(g, t);
    CHECK(c.a_k == q - 1);
    CHECK(c.b_k == -1);
    CHECK(c.N_order == q);
    CHECK(c.t == 0);
    CHECK(all_pass(verify_certificate(g, t, c)));
    CHECK(classify_extreme(c) == Extreme::Frobenius);
  }
}

TEST_CASE("groups without the property") {
  for (Group g : {symmetric4(), dihedral_group(6), cyclic_group(6),
                  klein_four(), direct_product(dihedral8(), cyclic_group(2))}) {
    CharTable t = character_table(g);
    CHECK_FALSE(detect_cd1_columns(g, t).has_value());
    CHECK_FALSE(detect_cd1_vanishing(g, t).has_value());
  }
}

TEST_CASE("detection refuses degenerate orders") {
  for (uint64_t n : {1, 2}) {
    Group g = cyclic_group(n);
    CharTable t = character_table(g);
    CHECK_THROWS_WITH_AS(detect_cd1_columns(g, t),
                         doctest::Contains("group too small"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(detect_cd1_vanishing(g, t),
                         doctest::Contains("group too small"),
                         std::invalid_argument);
  }
}

TEST_CASE("verification notices a corrupted certificate") {
  Group g = dihedral_group(3);
  CharTable t = character_table(g);
  Certificate c = detect_both(g, t);
  Certificate bad = c;
  bad.p = 2;
  bad.N_order = 4;  // wrong subgroup order
  auto checks = verify_certificate(g, t, bad);
  CHECK_FALSE(all_pass(checks));
}

TEST_CASE("doubly transitive Frobenius witnesses") {
  Group s3 = dihedral_group(3);
  auto w = doubly_transitive_frobenius(s3);
  REQUIRE(w.has_value());
  CHECK(w->kernel.order() == 3);
  CHECK(w->complement.order() == 2);
  CHECK(intersect(s3, w->kernel, w->complement).order() == 1);
  CHECK(is_normal(s3, w->kernel));

  Group f20 = affine_line_q(5);
  auto w5 = doubly_transitive_frobenius(f20);
  REQUIRE(w5.has_value());
  CHECK(w5->kernel.order() == 5);
  CHECK(w5->complement.order() == 4);

  CHECK_FALSE(doubly_transitive_frobenius(dihedral8()).has_value());
  CHECK_FALSE(doubly_transitive_frobenius(symmetric4()).has_value());
  CHECK_FALSE(doubly_transitive_frobenius(cyclic_group(6)).has_value());
  // |G| = q(q-1) alone is not enough: C2 x C3 has order 6 but no structure
  CHECK_FALSE(doubly_transitive_frobenius(
                  direct_product(cyclic_group(2), cyclic_group(3)))
                  .has_value());
}

TEST_CASE("distinct nonlinear degrees") {
  CHECK(has_distinct_nonlinear_degrees(character_table(dihedral8())));
  CHECK(has_distinct_nonlinear_degrees(character_table(dihedral_group(3))));
  // D12 has two characters of degree 2
  CHECK_FALSE(has_distinct_nonlinear_degrees(character_table(dihedral_group(6))));
}

TEST_CASE("certificate serialization carries the checks") {
  Group g = dihedral8();
  CharTable t = character_table(g);
  Certificate c = detect_both(g, t);
  auto checks = verify_certificate(g, t, c);
  std::string js = certificate_to_json(c, checks);
  CHECK(js.find("\"a_k\"") != std::string::npos);
  CHECK(js.find("\"b_k\"") != std::string::npos);
  CHECK(js.find("\"checks\"") != std::string::npos);
  CHECK(js.find("gagola-row-two-support") != std::string::npos);
}
