#include <cstdio>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "cd1lab/census.hpp"
#include "cd1lab/zoo.hpp"
#include "doctest.h"

using namespace cd1lab;

namespace {
std::string fixture(const std::string& name) {
  return std::string(CD1LAB_FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("finite field arithmetic") {
  for (auto [p, n] : {std::pair<uint64_t, uint32_t>{2, 2},
                      {2, 3},
                      {2, 4},
                      {3, 2},
                      {5, 1},
                      {3, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    FiniteField f(p, n);
    const uint64_t q = f.size();
    CHECK(q == [&] { uint64_t s = 1; for (uint32_t i = 0; i < n; ++i) s *= p; return s; }());
    CHECK(f.modulus().size() == n + 1);
    CHECK(f.modulus()[n] == 1);

    // generator has full multiplicative order
    uint64_t g = f.generator(), x = g;
    for (uint64_t i = 1; i < q - 1; ++i) {
      CHECK(x != 1);
      x = f.mul(x, g);
    }
    CHECK(x == 1);
    CHECK(f.pow(g, q - 1) == 1);

    for (uint64_t a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      // Frobenius: (a+b)^p = a^p + b^p
      for (uint64_t b = 0; b < q; b += 3)
        CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(3, 1).inv(0), std::invalid_argument);
}

TEST_CASE("stock groups have the right shape") {
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(12).exponent() == 12);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(klein_four().order() == 4);
  CHECK(symmetric4().order() == 24);
  CHECK(symmetric4().num_classes() == 5);

  Group d8 = dihedral8(), q8 = quaternion8();
  CHECK(d8.order() == 8);
  CHECK(q8.order() == 8);
  CHECK(d8.num_classes() == 5);
  CHECK(q8.num_classes() == 5);
  // involution counts tell the two order-8 groups apart
  auto involutions = [](const Group& g) {
    int n = 0;
    for (uint32_t x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) ++n;
    return n;
  };
  CHECK(involutions(d8) == 5);
  CHECK(involutions(q8) == 1);
  CHECK_FALSE(isomorphic(d8, q8));
  CHECK_THROWS_AS(dihedral_group(2), std::invalid_argument);
}

TEST_CASE("affine lines are sharply 2-transitive") {
  for (uint64_t q : {3, 4, 5, 8, 9}) {
    CAPTURE(q);
    Group g = affine_line_q(q);
    CHECK(g.order() == q * (q - 1));
    CHECK(g.degree() == q);
    // transitivity on ordered pairs of distinct points: orbit of (0, 1)
    std::set<std::pair<uint32_t, uint32_t>> orbit;
    for (const Perm& e : g.elements()) orbit.insert({e(0), e(1)});
    CHECK(orbit.size() == q * (q - 1));
  }
  CHECK_THROWS_WITH_AS(affine_line_q(2), doctest::Contains("group too small"),
                       std::invalid_argument);
  CHECK_THROWS_AS(affine_line_q(6), std::invalid_argument);
}

TEST_CASE("extraspecial towers") {
  Group ep = extraspecial_2group(1, '+'), em = extraspecial_2group(1, '-');
  CHECK(isomorphic(ep, dihedral8()));
  CHECK(isomorphic(em, quaternion8()));

  for (char kind : {'+', '-'}) {
    Group g = extraspecial_2group(2, kind);
    CHECK(g.order() == 32);
    CHECK(center(g).order() == 2);
    CHECK(derived_subgroup(g).order() == 2);
    CHECK(g.exponent() == 4);
  }
  CHECK_FALSE(
      isomorphic(extraspecial_2group(2, '+'), extraspecial_2group(2, '-')));
  CHECK(extraspecial_2group(3, '+').order() == 128);
  CHECK_THROWS_AS(extraspecial_2group(0, '+'), std::invalid_argument);
  CHECK_THROWS_AS(extraspecial_2group(1, 'x'), std::invalid_argument);
}

TEST_CASE("the five groups of order 27") {
  auto gs = order27_groups();
  REQUIRE(gs.size() == 5);
  std::vector<uint64_t> expos, nclasses;
  for (const Group& g : gs) {
    CHECK(g.order() == 27);
    expos.push_back(g.exponent());
    nclasses.push_back(g.num_classes());
  }
  CHECK(expos == std::vector<uint64_t>{27, 9, 3, 3, 9});
  CHECK(nclasses == std::vector<uint64_t>{27, 27, 27, 11, 11});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK_FALSE(isomorphic(gs[i], gs[j]));
  // the nonabelian pair has center = derived of order 3
  for (std::size_t i : {3, 4}) {
    CHECK(center(gs[i]).order() == 3);
    CHECK(derived_subgroup(gs[i]).members == center(gs[i]).members);
  }
}

TEST_CASE("matrix arithmetic over small prime fields") {
  Mat a{2, 7, {1, 2, 3, 4}};
  CHECK(mat_det(a) == (1 * 4 - 2 * 3 + 7 * 7) % 7);
  Mat ai = mat_inv(a);
  CHECK(mat_mul(a, ai) == mat_identity(2, 7));
  Mat sing{2, 7, {1, 2, 2, 4}};
  CHECK(mat_det(sing) == 0);
  CHECK_THROWS_AS(mat_inv(sing), std::invalid_argument);
  CHECK(mat_order(mat_identity(2, 7), 10) == 1);
  Mat neg{2, 7, {6, 0, 0, 6}};
  CHECK(mat_order(neg, 10) == 2);
  CHECK(mat_fixes_only_zero(neg));
  CHECK_FALSE(mat_fixes_only_zero(mat_identity(2, 7)));
}

TEST_CASE("quaternion pair inside GL(2,3)") {
  auto [a, b] = find_quaternion_pair(3);
  CHECK(mat_order(a, 10) == 4);
  CHECK(mat_order(b, 10) == 4);
  CHECK(mat_mul(a, b) == mat_mul(mat_mul(b, a), mat_mul(a, a)));  // ba^2 = ab
  auto cl = matrix_closure({a, b}, 100);
  CHECK(cl.size() == 8);
  CHECK(parse_matrix_file(fixture("q8_gl2_3.mat")) ==
        std::vector<Mat>{a, b});
}

TEST_CASE("icosahedral pair inside GL(2,11)") {
  auto [a, b] = find_icosahedral_pair(11);
  CHECK(mat_det(a) == 1);
  CHECK(mat_det(b) == 1);
  CHECK(mat_order(a, 200) == 4);
  CHECK(mat_order(b, 200) == 5);
  auto rep = analyze_complement({a, b}, 1000);
  CHECK(rep.closure_order == 120);
  CHECK(rep.involutions == 1);
  CHECK(rep.fixed_point_free);
  CHECK(rep.derived_order == 120);  // perfect complement
  CHECK(parse_matrix_file(fixture("sl25_gl2_11.mat")) ==
        std::vector<Mat>{a, b});
}

TEST_CASE("scalar complements extend the matrix witnesses") {
  CHECK(scalar_of_order(29, 7) == 7);   // 7^7 = 1 mod 29, nothing smaller works
  CHECK(scalar_of_order(59, 29) == 3);  // smallest quadratic residue above 1
  CHECK_THROWS_AS(scalar_of_order(29, 13), std::runtime_error);  // 13 does not divide 28
  // order-840 witness: icosahedral pair times a scalar 7th root
  auto [a, b] = find_icosahedral_pair(29);
  uint64_t s = scalar_of_order(29, 7);
  Mat sc{2, 29, {s, 0, 0, s}};
  auto rep = analyze_complement({a, b, sc}, 2000);
  CHECK(rep.closure_order == 840);
  CHECK(rep.involutions == 1);
  CHECK(rep.fixed_point_free);
  CHECK(rep.derived_order == 120);
}

TEST_CASE("affine semidirect products") {
  auto [a, b] = find_quaternion_pair(3);
  Group g = affine_semidirect(3, 2, {a, b});
  CHECK(g.order() == 72);
  CHECK(g.degree() == 9);
  CHECK(center(g).order() == 1);

  // unipotent matrices have fixed vectors and must be rejected
  Mat u{2, 3, {1, 1, 0, 1}};
  CHECK_THROWS_WITH_AS(affine_semidirect(3, 2, {u}),
                       doctest::Contains("fixed-point-free"),
                       std::invalid_argument);
  Mat sing{2, 3, {1, 1, 1, 1}};
  CHECK_THROWS_AS(affine_semidirect(3, 2, {sing}), std::invalid_argument);
  CHECK_THROWS_AS(affine_semidirect(4, 2, {a}), std::invalid_argument);
  Mat wrongp{2, 5, {1, 0, 0, 1}};
  CHECK_THROWS_AS(affine_semidirect(3, 2, {wrongp}), std::invalid_argument);
}

TEST_CASE("matrix fixture files round trip") {
  auto [a, b] = find_quaternion_pair(3);
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/cd1lab_mats_roundtrip.mat";
  write_matrix_file(tmp, {a, b}, "quaternion pair");
  CHECK(parse_matrix_file(tmp) == std::vector<Mat>{a, b});
  std::remove(tmp.c_str());

  CHECK_THROWS_AS(parse_matrix_file(fixture("no_such_file.mat")),
                  std::exception);
}
