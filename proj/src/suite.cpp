#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cd1lab/cd1.hpp"
#include "cd1lab/census.hpp"
#include "cd1lab/chartable.hpp"
#include "cd1lab/group_io.hpp"
#include "cd1lab/matgroup.hpp"
#include "cd1lab/numutil.hpp"
#include "cd1lab/suite.hpp"
#include "cd1lab/zoo.hpp"

namespace cd1lab {

bool SuiteReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.pass; });
}

namespace {

struct Expected {
  uint64_t a_k = 0;
  long long b_k = 0;
  uint64_t p = 0;
  uint32_t n = 0;
  uint32_t t = 0;
  uint64_t N_order = 0;
  Extreme extreme = Extreme::None;
  bool dd = false;              // all nonlinear degrees distinct
  long long center_order = -1;  // -1: unchecked
  bool perfect = false;
  bool normal_sylow_p = false;
};

struct Member {
  std::string name;
  Group g;
  CharTable table;
  std::optional<Certificate> cert;
  Expected exp;
  bool positive = false;
};

void emit(SuiteReport& rep, const SuiteOptions& opt, std::string name,
          bool pass, std::string detail) {
  SuiteCase c{std::move(name), pass, std::move(detail)};
  if (opt.on_case) opt.on_case(c);
  rep.cases.push_back(std::move(c));
}

std::string cert_summary(const Certificate& c) {
  std::ostringstream os;
  os << "a_k=" << c.a_k << " b_k=" << c.b_k << " p=" << c.p << " n=" << c.n
     << " t=" << c.t << " |N|=" << c.N_order;
  return os.str();
}

// the unique extension of a nonabelian order-27 group whose table has a
// single-difference column pair
Group cd1_double(const Group& p27) {
  auto cands = center_inverted_doubles(p27);
  for (Group& g : cands) {
    CharTable tab = character_table(g);
    if (detect_cd1_columns(g, tab)) return std::move(g);
  }
  throw std::logic_error("no single-difference double found (internal error)");
}

bool is_extraspecial2(const Group& g) {
  auto pp = prime_power(g.order());
  if (!pp || pp->first != 2) return false;
  Subgroup z = center(g);
  return z.order() == 2 && derived_subgroup(g).members == z.members;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  std::vector<Member> corpus;

  auto add_pos = [&](std::string name, Group g, const Expected& e) {
    CharTable tab = character_table(g);
    corpus.push_back(
        Member{std::move(name), std::move(g), std::move(tab), std::nullopt, e, true});
  };
  auto add_neg = [&](std::string name, Group g) {
    CharTable tab = character_table(g);
    corpus.push_back(Member{std::move(name), std::move(g), std::move(tab),
                            std::nullopt, Expected{}, false});
  };

  add_pos("s3", dihedral_group(3),
          {.a_k = 2, .b_k = -1, .p = 3, .n = 1, .t = 0, .N_order = 3,
           .extreme = Extreme::Frobenius, .dd = true, .center_order = 1});
  add_pos("d8", dihedral8(),
          {.a_k = 2, .b_k = -2, .p = 2, .n = 1, .t = 1, .N_order = 2,
           .extreme = Extreme::CentralType, .dd = true, .center_order = 2});
  add_pos("q8", quaternion8(),
          {.a_k = 2, .b_k = -2, .p = 2, .n = 1, .t = 1, .N_order = 2,
           .extreme = Extreme::CentralType, .dd = true, .center_order = 2});
  for (uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
    auto pp = prime_power(q);
    add_pos("agl1_" + std::to_string(q), affine_line_q(q),
            {.a_k = q - 1, .b_k = -1, .p = pp->first, .n = pp->second, .t = 0,
             .N_order = q, .extreme = Extreme::Frobenius, .dd = true,
             .center_order = 1});
  }
  for (uint32_t m : {2u, 3u})
    for (char kind : {'+', '-'}) {
      std::string name = "es" + std::to_string(1ull << (2 * m + 1)) +
                         (kind == '+' ? "p" : "m");
      add_pos(name, extraspecial_2group(m, kind),
              {.a_k = 1ull << m, .b_k = -(long long)(1ull << m), .p = 2,
               .n = 1, .t = m, .N_order = 2, .extreme = Extreme::CentralType,
               .dd = true, .center_order = 2});
    }
  {
    auto o27 = order27_groups();
    const Expected e54{.a_k = 6, .b_k = -3, .p = 3, .n = 1, .t = 1,
                       .N_order = 3, .extreme = Extreme::None, .dd = false,
                       .center_order = 1, .normal_sylow_p = true};
    add_pos("o54_exp3", cd1_double(o27[3]), e54);
    add_pos("o54_exp9", cd1_double(o27[4]), e54);
  }
  {
    auto [qa, qb] = find_quaternion_pair(3);
    add_pos("aff9_q8", affine_semidirect(3, 2, {qa, qb}),
            {.a_k = 8, .b_k = -1, .p = 3, .n = 2, .t = 0, .N_order = 9,
             .extreme = Extreme::Frobenius, .dd = true, .center_order = 1});
  }
  {
    auto [ia, ib] = find_icosahedral_pair(11);
    add_pos("aff121_sl25", affine_semidirect(11, 2, {ia, ib}),
            {.a_k = 120, .b_k = -1, .p = 11, .n = 2, .t = 0, .N_order = 121,
             .extreme = Extreme::Frobenius, .dd = false, .center_order = 1,
             .perfect = true});
  }

  for (uint64_t n = 3; n <= 12; ++n)
    add_neg("c" + std::to_string(n), cyclic_group(n));
  add_neg("v4", klein_four());
  add_neg("s4", symmetric4());
  add_neg("d12", dihedral_group(6));

  for (Member& m : corpus) {
    auto c1 = detect_cd1_columns(m.g, m.table);
    auto c2 = detect_cd1_vanishing(m.g, m.table);
    bool agree = c1.has_value() == c2.has_value() &&
                 (!c1 || (c1->row_k == c2->row_k && c1->col_b == c2->col_b));
    if (!m.positive) {
      bool none = agree && !c1.has_value();
      emit(rep, opt, m.name + "/none", none,
           none ? "no single-difference pair"
                : (agree ? "unexpectedly detected" : "detectors disagree"));
      continue;
    }

    const Expected& e = m.exp;
    {
      bool det = agree && c1.has_value();
      std::string detail = agree ? (c1 ? cert_summary(*c1) : "not detected")
                                 : "detectors disagree";
      if (det) {
        const Certificate& c = *c1;
        det = c.a_k == e.a_k && c.b_k == e.b_k && c.p == e.p && c.n == e.n &&
              c.t == e.t && c.N_order == e.N_order;
        if (!det) detail += " (unexpected values)";
      }
      emit(rep, opt, m.name + "/detect", det, detail);
    }
    if (!c1) continue;
    m.cert = c1;

    {
      auto checks = verify_certificate(m.g, m.table, *c1);
      bool vp = all_pass(checks);
      std::string vd = std::to_string(checks.size()) + " checks";
      if (!vp)
        for (const auto& ck : checks)
          if (!ck.pass) {
            vd = ck.id + ": " + ck.evidence;
            break;
          }
      emit(rep, opt, m.name + "/verify", vp, vd);
    }
    {
      Extreme ex = classify_extreme(*c1);
      bool okx = ex == e.extreme;
      std::string xd = extreme_name(ex);
      if (ex == Extreme::Frobenius) {
        auto w = doubly_transitive_frobenius(m.g);
        okx = okx && w && w->kernel.order() == c1->N_order &&
              w->complement.order() == m.g.order() / c1->N_order;
        if (!w) xd += " (no kernel/complement split found)";
      }
      emit(rep, opt, m.name + "/extreme", okx, xd);
    }
    {
      bool dd = has_distinct_nonlinear_degrees(m.table);
      emit(rep, opt, m.name + "/degrees", dd == e.dd,
           degree_pattern_string(m.table));
    }
    if (e.center_order >= 0 || e.perfect || e.normal_sylow_p) {
      bool sp = true;
      std::ostringstream sd;
      if (e.center_order >= 0) {
        uint64_t zo = center(m.g).order();
        sp = sp && zo == (uint64_t)e.center_order;
        sd << "|Z|=" << zo;
      }
      if (e.perfect) {
        uint64_t dor = derived_subgroup(m.g).order();
        sp = sp && dor == m.g.order();
        sd << " |G'|=" << dor;
      }
      if (e.normal_sylow_p) {
        bool ns = is_normal(m.g, sylow_subgroup(m.g, c1->p));
        sp = sp && ns;
        sd << " sylow-" << c1->p << (ns ? " normal" : " not normal");
      }
      emit(rep, opt, m.name + "/structure", sp, sd.str());
    }
  }

  // order <= 2 is rejected rather than reported as a negative
  {
    Group c2g = cyclic_group(2);
    CharTable t2 = character_table(c2g);
    bool threw1 = false, threw2 = false;
    try {
      detect_cd1_columns(c2g, t2);
    } catch (const std::invalid_argument&) {
      threw1 = true;
    }
    try {
      detect_cd1_vanishing(c2g, t2);
    } catch (const std::invalid_argument&) {
      threw2 = true;
    }
    emit(rep, opt, "guard/too-small", threw1 && threw2, "order 2 rejected");
  }

  // nontrivial center <=> b_k = -a_k, and then |Z| = 2 with |G| = 2 a_k^2
  {
    bool ok = true;
    int withz = 0;
    std::ostringstream d;
    for (const Member& m : corpus) {
      if (!m.cert) continue;
      uint64_t zo = center(m.g).order();
      bool extreme_central = m.cert->b_k == -(long long)m.cert->a_k;
      if ((zo > 1) != extreme_central) {
        ok = false;
        d << m.name << " breaks the dichotomy; ";
      }
      if (zo > 1) {
        ++withz;
        if (zo != 2 || m.cert->p != 2 ||
            m.g.order() != 2 * m.cert->a_k * m.cert->a_k)
          ok = false;
      }
    }
    d << withz << " with nontrivial center";
    emit(rep, opt, "scan/center-dichotomy", ok, d.str());
  }
  // 2|G| = 3 a_k^2 forces |N| = 3 and a normal Sylow 3-subgroup
  {
    bool ok = true;
    int hits = 0;
    for (const Member& m : corpus) {
      if (!m.cert) continue;
      if (2 * m.g.order() != 3 * m.cert->a_k * m.cert->a_k) continue;
      ++hits;
      if (m.cert->N_order != 3 || m.cert->p != 3 ||
          !is_normal(m.g, sylow_subgroup(m.g, 3)))
        ok = false;
    }
    emit(rep, opt, "scan/n3-forcing", ok,
         std::to_string(hits) + " groups at the bound");
  }
  // nonabelian + all nonlinear degrees distinct forces an extreme case
  {
    bool ok = true;
    int dds = 0;
    for (const Member& m : corpus) {
      if (m.table.degree(m.table.num_rows() - 1) <= 1) continue;  // abelian
      if (!has_distinct_nonlinear_degrees(m.table)) continue;
      ++dds;
      if (!m.cert) {
        ok = false;
        continue;
      }
      bool fro = m.cert->b_k == -1;
      bool ct = is_extraspecial2(m.g);
      if (classify_extreme(*m.cert) == Extreme::None || !(fro || ct)) ok = false;
    }
    emit(rep, opt, "scan/distinct-degrees", ok,
         std::to_string(dds) + " groups with all nonlinear degrees distinct");
  }

  if (!opt.corpus_dir.empty()) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& ent : fs::directory_iterator(opt.corpus_dir))
      if (ent.path().extension() == ".grp") files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Group g = load_group_file(f.string());
      CharTable tab = character_table(g);
      std::optional<Certificate> c1;
      std::string detail;
      bool ok = true;
      try {
        c1 = detect_cd1_columns(g, tab);
        auto c2 = detect_cd1_vanishing(g, tab);
        ok = c1.has_value() == c2.has_value();
        detail = c1 ? cert_summary(*c1) : "no single-difference pair";
        if (ok && c1) ok = all_pass(verify_certificate(g, tab, *c1));
      } catch (const std::invalid_argument& ex) {
        detail = ex.what();  // too small to qualify
      }
      emit(rep, opt, "file/" + f.stem().string(), ok, detail);
    }
  }

  if (opt.include_large) {
    struct BigCase {
      const char* name;
      uint64_t p;
      uint64_t scalar_order;
      uint64_t comp_order;
    };
    for (BigCase bc : {BigCase{"gl2_29_sl25xc7", 29, 7, 840},
                       BigCase{"gl2_59_sl25xc29", 59, 29, 3480}}) {
      auto [A, B] = find_icosahedral_pair(bc.p);
      Mat s = mat_identity(2, bc.p);
      uint64_t lam = scalar_of_order(bc.p, bc.scalar_order);
      s.at(0, 0) = lam;
      s.at(1, 1) = lam;
      ComplementReport r = analyze_complement({A, B, s}, 10000);
      bool ok = r.closure_order == bc.comp_order && r.involutions == 1 &&
                r.fixed_point_free && r.derived_order == 120;
      std::ostringstream d;
      d << "complement " << r.closure_order << ", kernel " << bc.p
        << "^2, affine order " << bc.p * bc.p * r.closure_order;
      emit(rep, opt, std::string("large/") + bc.name, ok, d.str());
    }
  }

  return rep;
}

}  // namespace cd1lab
