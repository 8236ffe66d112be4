#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cd1lab/cd1.hpp"
#include "cd1lab/census.hpp"
#include "cd1lab/suite.hpp"
#include "cd1lab/zoo.hpp"
#include "doctest.h"
#include "oracle_table.hpp"

using namespace cd1lab;

namespace {

// One acceptance criterion = one printed pass/fail line. Failures keep the
// explanatory notes so the log shows *what* broke, not just that it did.
struct Criterion {
  std::string name;
  bool ok = true;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back(what);
    }
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }

  void finish(double budget) {
    double s = seconds();
    expect(s < budget, "time budget exceeded: " + std::to_string(s) +
                           " s, budget " + std::to_string(budget) + " s");
    std::printf("[acceptance] %-28s %s (%.2f s)\n", name.c_str(),
                ok ? "PASS" : "FAIL", s);
    for (const auto& n : notes) std::printf("             - %s\n", n.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, name);
  }
};

struct Detected {
  CharTable table;
  Certificate cert;
};

Detected detect_checked(Criterion& c, const Group& g) {
  Detected d{character_table(g), {}};
  auto a = detect_cd1_columns(g, d.table);
  auto b = detect_cd1_vanishing(g, d.table);
  c.expect(a.has_value(), "column scan found nothing");
  c.expect(b.has_value(), "vanishing scan found nothing");
  if (a && b) {
    c.expect(a->row_k == b->row_k && a->col_b == b->col_b &&
                 a->b_k == b->b_k,
             "the two detectors disagree");
  }
  if (a) d.cert = *a;
  return d;
}

void verify_all(Criterion& c, const Group& g, const Detected& d,
                const std::string& tag) {
  if (d.cert.group_order == 0) return;  // detection already failed above
  for (const auto& r : verify_certificate(g, d.table, d.cert))
    c.expect(r.pass, tag + ": check " + r.id + " failed: " + r.evidence);
}

}  // namespace

TEST_CASE("criterion 1: smallest group") {
  Criterion c("s3-certificate");
  Group g = dihedral_group(3);
  auto d = detect_checked(c, g);
  c.expect(d.cert.a_k == 2 && d.cert.b_k == -1, "certificate values");
  c.expect(d.cert.p == 3 && d.cert.n == 1 && d.cert.t == 0, "p^n and t");
  c.expect(classify_extreme(d.cert) == Extreme::Frobenius,
           "not the Frobenius extreme");
  c.expect(doubly_transitive_frobenius(g).has_value(),
           "no 2-transitive Frobenius witness");
  verify_all(c, g, d, "s3");
  c.finish(1.0);
}

TEST_CASE("criterion 2: order-8 central type pair") {
  Criterion c("d8-q8-central-type");
  for (auto [name, g] : {std::pair<const char*, Group>{"d8", dihedral8()},
                         {"q8", quaternion8()}}) {
    auto d = detect_checked(c, g);
    c.expect(d.cert.a_k == 2 && d.cert.b_k == -2,
             std::string(name) + ": expected b = -a = -2");
    c.expect(classify_extreme(d.cert) == Extreme::CentralType,
             std::string(name) + ": not central type");
    c.expect(center(g).order() == 2, std::string(name) + ": |Z| != 2");
    verify_all(c, g, d, name);
  }
  c.finish(1.0);
}

TEST_CASE("criterion 3: full affine lines") {
  Criterion c("affine-lines");
  for (uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    std::string tag = "q=" + std::to_string(q);
    Group g = affine_line_q(q);
    auto d = detect_checked(c, g);
    c.expect(d.cert.a_k == q - 1 && d.cert.b_k == -1,
             tag + ": certificate values");
    c.expect(d.cert.N_order == q, tag + ": |N| != q");
    // N is the translation kernel: regular, normal, fixed point free
    auto w = doubly_transitive_frobenius(g);
    c.expect(w.has_value(), tag + ": no Frobenius witness");
    if (w) {
      c.expect(w->kernel.order() == q, tag + ": kernel size");
      bool fpf = true;
      for (uint32_t x : w->kernel.members) {
        if (x == 0) continue;
        const Perm& e = g.elements()[x];
        for (uint32_t pt = 0; pt < g.degree(); ++pt)
          if (e(pt) == pt) fpf = false;
      }
      c.expect(fpf, tag + ": kernel has fixed points");
    }
    verify_all(c, g, d, tag);
  }
  c.finish(10.0);
}

TEST_CASE("criterion 4: extraspecial towers") {
  Criterion c("extraspecial-2-groups");
  for (uint32_t m : {1, 2, 3}) {
    for (char kind : {'+', '-'}) {
      std::string tag = "m=" + std::to_string(m) + kind;
      Group g = extraspecial_2group(m, kind);
      auto d = detect_checked(c, g);
      uint64_t pm = uint64_t(1) << m;  // 2^m
      std::vector<uint64_t> want(uint64_t(1) << (2 * m), 1);
      want.push_back(pm);
      c.expect(degree_multiset(d.table) == want, tag + ": degree pattern");
      c.expect(d.cert.a_k == pm && d.cert.b_k == -(long long)pm,
               tag + ": certificate values");
      verify_all(c, g, d, tag);
    }
  }
  c.finish(30.0);
}

TEST_CASE("criterion 5: order-72 distinct-degree witness") {
  Criterion c("order-72-dd");
  auto [a, b] = find_quaternion_pair(3);
  Group g = affine_semidirect(3, 2, {a, b});
  c.expect(g.order() == 72, "order != 72");
  auto d = detect_checked(c, g);
  c.expect(degree_pattern_string(d.table) == "(1^(4),2,8)",
           "degree pattern is " + degree_pattern_string(d.table));
  c.expect(has_distinct_nonlinear_degrees(d.table),
           "nonlinear degrees repeat");
  c.expect(d.cert.a_k == 8 && d.cert.b_k == -1, "certificate values");
  verify_all(c, g, d, "order-72");
  c.finish(5.0);
}

TEST_CASE("criterion 6: the order-14520 Frobenius group") {
  Criterion c("order-14520");
  auto [a, b] = find_icosahedral_pair(11);
  Group g = affine_semidirect(11, 2, {a, b});
  c.expect(g.order() == 14520, "order != 14520");
  auto d = detect_checked(c, g);
  c.expect(degree_multiset(d.table) ==
               std::vector<uint64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6, 120},
           "degrees are " + degree_pattern_string(d.table));
  c.expect(d.cert.a_k == 120 && d.cert.b_k == -1, "certificate values");
  c.expect(derived_subgroup(g).order() == g.order(), "not perfect");
  c.expect(!has_distinct_nonlinear_degrees(d.table),
           "nonlinear degrees unexpectedly distinct");
  verify_all(c, g, d, "14520");
  c.finish(600.0);
}

TEST_CASE("criterion 7: order-54 witnesses") {
  Criterion c("order-54-witnesses");
  auto o27 = order27_groups();
  for (std::size_t i : {3, 4}) {
    std::string tag = i == 3 ? "exp3" : "exp9";
    bool found = false;
    for (Group& g : center_inverted_doubles(o27[i])) {
      CharTable t = character_table(g);
      auto cert = detect_cd1_columns(g, t);
      if (!cert) continue;
      found = true;
      c.expect(cert->a_k == 6 && cert->b_k == -3,
               tag + ": certificate values");
      c.expect(cert->p == 3 && cert->n == 1 && cert->t == 1 &&
                   cert->N_order == 3,
               tag + ": p, n, t, |N|");
      c.expect(center(g).order() == 1, tag + ": center not trivial");
      c.expect(classify_extreme(*cert) == Extreme::None,
               tag + ": unexpectedly extreme");
      Subgroup syl = sylow_subgroup(g, 3);
      c.expect(syl.order() == 27 && is_normal(g, syl),
               tag + ": Sylow 3-subgroup not normal");
      for (const auto& r : verify_certificate(g, t, *cert))
        c.expect(r.pass, tag + ": check " + r.id + " failed: " + r.evidence);
    }
    c.expect(found, tag + ": no single-difference double found");
  }
  c.finish(5.0);
}

TEST_CASE("criterion 8: invariant suite over the corpus") {
  Criterion c("invariant-suite");
  SuiteOptions opt;
  opt.include_large = true;  // adds the structural GL(2,29)/GL(2,59) cases
  SuiteReport rep = run_suite(opt);
  c.expect(rep.cases.size() >= 60,
           "suspiciously few cases: " + std::to_string(rep.cases.size()));
  for (const auto& sc : rep.cases)
    c.expect(sc.pass, sc.name + (sc.detail.empty() ? "" : ": " + sc.detail));
  c.finish(900.0);
}

TEST_CASE("criterion 9: negative corpus") {
  Criterion c("negative-corpus");
  std::vector<std::pair<std::string, Group>> neg;
  for (uint64_t n = 3; n <= 12; ++n)
    neg.emplace_back("c" + std::to_string(n), cyclic_group(n));
  neg.emplace_back("v4", klein_four());
  neg.emplace_back("s4", symmetric4());
  neg.emplace_back("d12", dihedral_group(6));
  for (auto& [name, g] : neg) {
    CharTable t = character_table(g);
    c.expect(!detect_cd1_columns(g, t).has_value(),
             name + ": column scan claimed a certificate");
    c.expect(!detect_cd1_vanishing(g, t).has_value(),
             name + ": vanishing scan claimed a certificate");
  }
  // A4 is the full affine line on four points, so it carries a certificate;
  // listing it as a negative would contradict the affine-line criterion.
  Group a4 = affine_line_q(4);
  CharTable t4 = character_table(a4);
  auto c4 = detect_cd1_columns(a4, t4);
  c.expect(c4.has_value() && c4->a_k == 3 && c4->b_k == -1,
           "a4: expected the affine-line certificate");
  c.finish(10.0);
}

TEST_CASE("criterion 10: oracle equivalence") {
  Criterion c("oracle-equivalence");
  std::vector<std::pair<std::string, Group>> corpus;
  for (uint64_t n = 1; n <= 12; ++n)
    corpus.emplace_back("c" + std::to_string(n), cyclic_group(n));
  corpus.emplace_back("v4", klein_four());
  corpus.emplace_back("s3", dihedral_group(3));
  corpus.emplace_back("d8", dihedral8());
  corpus.emplace_back("q8", quaternion8());
  corpus.emplace_back("d12", dihedral_group(6));
  corpus.emplace_back("a4", affine_line_q(4));
  corpus.emplace_back("f20", affine_line_q(5));
  corpus.emplace_back("s4", symmetric4());
  for (auto& [name, g] : corpus) {
    CharTable lib = character_table(g);
    CharTable alt = oracle::oracle_character_table(g);
    bool same = lib.num_rows() == alt.num_rows();
    if (same)
      for (uint32_t i = 0; i < lib.num_rows(); ++i)
        if (!(lib.rows[i] == alt.rows[i])) same = false;
    c.expect(same, name + ": tables differ");
  }
  c.finish(60.0);
}
