#include <set>
#include <sstream>

#include "cd1lab/cd1.hpp"
#include "cd1lab/numutil.hpp"

namespace cd1lab {

namespace {

std::string eq_ev(uint64_t lhs, uint64_t rhs) {
  return "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
}

bool is_pow2(uint64_t x) { return x >= 1 && (x & (x - 1)) == 0; }

}  // namespace

std::vector<CheckResult> verify_certificate(const Group& g, const CharTable& t,
                                            const Certificate& c) {
  std::vector<CheckResult> out;
  auto add = [&](const char* id, bool pass, std::string ev) {
    out.push_back({id, pass, std::move(ev)});
  };

  const uint64_t order = c.group_order;
  const uint64_t a = c.a_k;
  const long long b = c.b_k;
  const uint64_t ub = static_cast<uint64_t>(-b);
  const uint64_t p = c.p;
  const uint32_t k = t.num_classes();
  const uint32_t last = t.num_rows() - 1;

  // ---- shape of the table ----
  add("gagola-row-last", c.row_k == last,
      "row=" + std::to_string(c.row_k) + " last=" + std::to_string(last));
  {
    std::vector<uint32_t> support;
    for (uint32_t j = 0; j < k; ++j)
      if (!t.rows[c.row_k][j].is_zero()) support.push_back(j);
    bool ok = support.size() == 2 && support[0] == 0 && support[1] == c.col_b;
    add("gagola-row-two-support", ok,
        "support_size=" + std::to_string(support.size()));
    add("b-class-unique", ok && t.class_sizes[c.col_b] == c.b_class_size,
        "col=" + std::to_string(c.col_b));
  }
  {
    const Cyclo& bv = t.rows[c.row_k][c.col_b];
    bool ok = bv.is_rational() && bv.rational_value() < 0 &&
              bv.rational_value() == b;
    add("b-value-negative-integer", ok, "value=" + bv.to_string());
  }
  {
    uint32_t pairs = 0;
    bool ours = false;
    for (uint32_t j1 = 0; j1 < k; ++j1)
      for (uint32_t j2 = j1 + 1; j2 < k; ++j2)
        if (column_diff_count(t, j1, j2) == 1) {
          ++pairs;
          if (j1 == 0 && j2 == c.col_b) ours = true;
        }
    add("diff-pair-unique-all-pairs", pairs == 1 && ours,
        "pairs=" + std::to_string(pairs));
  }

  // ---- arithmetic consequences ----
  add("order-formula", order == a * a + ub * a,
      eq_ev(order, a * a + ub * a));
  add("order-bounds", a * a + a <= order && order <= 2 * a * a,
      "g=" + std::to_string(order) + " a=" + std::to_string(a));
  {
    uint64_t second = t.num_rows() >= 2 ? t.degree(last - 1) : 0;
    add("degree-monotone", second < a, eq_ev(second, a));
  }
  add("b-range", 1 <= ub && ub <= a, "-b=" + std::to_string(ub));
  add("degree-orbit-product", a == ub * c.b_class_size,
      eq_ev(a, ub * c.b_class_size));
  add("order-orbit-form",
      order == ipow(p, c.n + 2 * c.t) * (ipow(p, c.n) - 1),
      eq_ev(order, ipow(p, c.n + 2 * c.t) * (ipow(p, c.n) - 1)));
  add("b-prime-power", ub == ipow(p, c.t), eq_ev(ub, ipow(p, c.t)));
  uint64_t ppart = 1;
  {
    uint64_t rest = order;
    while (rest % p == 0) {
      ppart *= p;
      rest /= p;
    }
    add("order-p-form", ppart == ipow(p, c.n + 2 * c.t),
        eq_ev(ppart, ipow(p, c.n + 2 * c.t)));
  }
  add("orbit-size-bounds", a >= c.b_class_size && c.b_class_size >= p - 1,
      "a=" + std::to_string(a) + " orbit=" + std::to_string(c.b_class_size) +
          " p=" + std::to_string(p));
  add("order-even", order % 2 == 0, "g=" + std::to_string(order));
  add("orbit-size", c.b_class_size == ipow(p, c.n) - 1,
      eq_ev(c.b_class_size, ipow(p, c.n) - 1));
  add("orbit-coprime", c.b_class_size % p != 0,
      "orbit=" + std::to_string(c.b_class_size));

  // ---- the kernel subgroup N = {1} u b^G ----
  std::vector<uint32_t> nm{0};
  for (uint32_t m : g.classes()[c.col_b].members) nm.push_back(m);
  std::sort(nm.begin(), nm.end());
  bool closed = true;
  for (uint32_t x : nm)
    for (uint32_t y : nm)
      if (!std::binary_search(nm.begin(), nm.end(), g.mul(x, y))) {
        closed = false;
        break;
      }
  add("N-subgroup", closed && nm.size() == c.N_order,
      "candidate_size=" + std::to_string(nm.size()));
  if (!closed) return out;  // everything below needs the subgroup
  const Subgroup N = subgroup_from_members(g, nm);

  add("b-order-prime", g.element_order(t.class_reps[c.col_b]) == p,
      eq_ev(g.element_order(t.class_reps[c.col_b]), p));
  {
    Subgroup inter = whole_group(g);
    for (uint32_t i = 0; i < t.num_rows(); ++i) {
      if (i == c.row_k) continue;
      inter = intersect(g, inter, kernel_of_row(g, t, i));
    }
    add("N-kernel-intersection", inter.members == N.members,
        eq_ev(inter.order(), N.order()));
  }
  {
    bool normal = is_normal(g, N);
    bool minimal = normal;
    if (normal)
      for (const Subgroup& s : subgroups_within(g, N))
        if (s.order() != 1 && s.order() != N.order() && is_normal(g, s)) {
          minimal = false;
          break;
        }
    add("N-minimal-normal", normal && minimal,
        std::string("normal=") + (normal ? "yes" : "no"));
  }
  {
    auto shape = elementary_abelian_shape(g, N);
    bool ok = shape && shape->first == p && shape->second == c.n;
    add("N-elementary-abelian", ok,
        shape ? "p=" + std::to_string(shape->first) +
                    " n=" + std::to_string(shape->second)
              : "not elementary abelian");
  }
  const Subgroup derived = derived_subgroup(g);
  add("N-in-derived",
      std::includes(derived.members.begin(), derived.members.end(),
                    N.members.begin(), N.members.end()),
      "|G'|=" + std::to_string(derived.order()));

  // ---- local structure at the prime p ----
  {
    bool ok = true;
    for (uint32_t x : N.members) {
      if (x == 0) continue;
      uint64_t cent = order / g.classes()[g.class_of(x)].size;
      if (cent != ppart) ok = false;  // |C_G(x)| = full p-part = Sylow order
    }
    add("ls1-centralizer-sylow", ok && ppart == ipow(p, c.n + 2 * c.t),
        "expected=" + std::to_string(ppart));
  }
  const Subgroup P = sylow_subgroup(g, p);
  const Subgroup ZP = intersect(g, centralizer_of_subgroup(g, P), P);
  add("ls2-sylow-center-in-kernel",
      std::includes(N.members.begin(), N.members.end(), ZP.members.begin(),
                    ZP.members.end()),
      "|Z(P)|=" + std::to_string(ZP.order()));
  add("ls3-nonabelian-when-proper",
      N.order() == P.order() || !is_abelian_subgroup(g, P),
      "|N|=" + std::to_string(N.order()) + " |P|=" + std::to_string(P.order()));
  {
    // N is covered by the conjugates of Z(P), pairwise meeting in 1 only
    std::set<std::vector<uint32_t>> conjs;
    for (uint32_t x = 0; x < g.order(); ++x)
      conjs.insert(conjugate_subgroup(g, ZP, x).members);
    std::set<uint32_t> covered;
    for (const auto& cj : conjs) covered.insert(cj.begin(), cj.end());
    bool cover = covered == std::set<uint32_t>(N.members.begin(), N.members.end());
    bool disjoint = true;
    for (auto it1 = conjs.begin(); it1 != conjs.end() && disjoint; ++it1)
      for (auto it2 = std::next(it1); it2 != conjs.end(); ++it2) {
        std::vector<uint32_t> meet;
        std::set_intersection(it1->begin(), it1->end(), it2->begin(),
                              it2->end(), std::back_inserter(meet));
        if (meet.size() > 1) {
          disjoint = false;
          break;
        }
      }
    add("ls4-kernel-center-cover", cover && disjoint,
        "conjugates=" + std::to_string(conjs.size()));
  }
  {
    bool zp_is_n = ZP.members == N.members;
    bool p_normal = is_normal(g, P);
    add("ls5-central-iff-normal-sylow", zp_is_n == p_normal,
        std::string("Z(P)=N:") + (zp_is_n ? "yes" : "no") +
            " P normal:" + (p_normal ? "yes" : "no"));
  }
  {
    Subgroup cn = centralizer_of_subgroup(g, N);
    Subgroup op = p_core(g, p);
    add("ls6-centralizer-of-kernel", cn.members == op.members,
        eq_ev(cn.order(), op.order()));
  }
  {
    bool ok = true;
    uint32_t checked = 0;
    for (const ConjugacyClass& cl : g.classes()) {
      if (cl.rep == 0 || cl.element_order % p == 0) continue;
      ++checked;
      Subgroup nc = normal_closure(g, {cl.rep});
      bool has_p = false;
      for (uint32_t m : nc.members)
        if (g.element_order(m) % p == 0) {
          has_p = true;
          break;
        }
      if (!has_p) {  // nontrivial normal p'-subgroup found
        ok = false;
        break;
      }
    }
    add("ls7-trivial-p-prime-core", ok,
        "p'-reps checked=" + std::to_string(checked));
  }
  {
    Quotient q = quotient_group(g, N);
    bool ok = true;
    for (const ConjugacyClass& cl : g.classes()) {
      if (N.contains(cl.rep)) continue;
      uint64_t cg = order / cl.size;
      uint32_t qi = q.coset_of[cl.rep];
      uint64_t cq = q.group.order() / q.group.classes()[q.group.class_of(qi)].size;
      if (cg != cq) {
        ok = false;
        break;
      }
    }
    add("ls8-camina-pair", ok, "quotient_order=" + std::to_string(q.group.order()));
  }
  {
    Subgroup nzp = normalizer(g, ZP);
    Subgroup np = normalizer(g, P);
    add("ls9-normalizer-equality", nzp.members == np.members,
        eq_ev(nzp.order(), np.order()));
  }

  // ---- the center ----
  const Subgroup Z = center(g);
  add("center-in-kernel",
      std::includes(N.members.begin(), N.members.end(), Z.members.begin(),
                    Z.members.end()),
      "|Z|=" + std::to_string(Z.order()));
  {
    bool case_trivial = Z.order() == 1 && c.b_class_size >= 2 && 2 * ub <= a &&
                        2 * order <= 3 * a * a;
    bool case_two = Z.order() == 2 && p == 2 && c.n == 1 &&
                    b == -static_cast<long long>(a) && order == 2 * a * a &&
                    g.class_of(Z.members[1]) == c.col_b;
    add("center-dichotomy-exclusive", case_trivial != case_two,
        "|Z|=" + std::to_string(Z.order()));
  }
  add("center-order2-iff-extreme-b",
      (Z.order() == 2) == (b == -static_cast<long long>(a)),
      "|Z|=" + std::to_string(Z.order()) + " b=" + std::to_string(b));

  // ---- classification statements ----
  const bool lower_all_one = t.num_rows() < 2 || t.degree(last - 1) == 1;
  {
    bool lhs = derived.members == N.members;
    bool pattern_central = lower_all_one &&
                           b == -static_cast<long long>(a) && order == 2 * a * a;
    bool pattern_frob = lower_all_one && b == -1;
    add("derived-equality-case-analysis", lhs == (pattern_central || pattern_frob),
        std::string("G'=N:") + (lhs ? "yes" : "no") + " pattern:" +
            (pattern_central ? "central" : pattern_frob ? "frobenius" : "none"));
  }
  {
    Subgroup cn = centralizer_of_subgroup(g, N);
    add("self-centralizing-kernel-iff-frobenius",
        (cn.members == N.members) == (b == -1),
        "|C(N)|=" + std::to_string(cn.order()));
  }
  {
    auto fw = doubly_transitive_frobenius(g);
    bool is_frob = fw && fw->kernel.members == N.members;
    bool b_minus_one = b == -1;
    bool deg_coprime = a % p != 0;
    add("extreme-frobenius-iff-b-minus-one",
        b_minus_one == deg_coprime && deg_coprime == is_frob,
        std::string("b=-1:") + (b_minus_one ? "y" : "n") + " p|a:" +
            (deg_coprime ? "n" : "y") + " frobenius:" + (is_frob ? "y" : "n"));
  }
  {
    bool lhs = b == -static_cast<long long>(a);
    bool rhs = is_pow2(order) && Z.order() == 2 && order == 2 * a * a;
    add("extreme-central-type-iff-b-minus-ak", lhs == rhs,
        std::string("b=-a:") + (lhs ? "y" : "n") + " central2group:" +
            (rhs ? "y" : "n"));
  }
  {
    auto app = prime_power(a);
    if (!app) {
      add("prime-power-degree-case", true, "a_k not a prime power: vacuous");
    } else {
      int matches = 0;
      if (is_pow2(order) && b == -static_cast<long long>(a)) ++matches;
      if (b == -1 && is_pow2(a + 1)) ++matches;               // kernel a 2-group
      if (b == -1 && order == 72) ++matches;                  // the order-72 pair
      if (b == -1 && is_pow2(a) && a + 1 == p) ++matches;     // kernel C_p, p = a+1
      add("prime-power-degree-case", matches == 1,
          "matches=" + std::to_string(matches));
    }
  }
  {
    if (2 * order != 3 * a * a) {
      add("three-halves-order-case", true, "g != (3/2)a^2: vacuous");
    } else {
      bool ok = c.N_order == 3 && p == 3 && c.n == 1 &&
                is_normal(g, sylow_subgroup(g, 3));
      add("three-halves-order-case", ok, "|N|=" + std::to_string(c.N_order));
    }
  }
  return out;
}

}  // namespace cd1lab
