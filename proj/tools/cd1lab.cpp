#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cd1lab/cd1.hpp"
#include "cd1lab/census.hpp"
#include "cd1lab/chartable.hpp"
#include "cd1lab/group_io.hpp"
#include "cd1lab/matgroup.hpp"
#include "cd1lab/suite.hpp"
#include "cd1lab/zoo.hpp"

namespace {

using namespace cd1lab;

// shared by `analyze` and `construct`: table, detection, certificate,
// verification. Returns the process exit code.
int report_group(const Group& g, bool json, bool show_table) {
  CharTable t = character_table(g);
  std::optional<Certificate> cert;
  std::string small_note;
  try {
    cert = detect_cd1_columns(g, t);
  } catch (const std::invalid_argument& e) {
    small_note = e.what();
  }

  std::vector<CheckResult> checks;
  if (cert) checks = verify_certificate(g, t, *cert);

  if (json) {
    nlohmann::json j;
    j["order"] = g.order();
    j["classes"] = t.num_classes();
    j["degrees"] = degree_multiset(t);
    j["cd1"] = cert.has_value();
    if (!small_note.empty()) j["note"] = small_note;
    if (cert)
      j["certificate"] = nlohmann::json::parse(certificate_to_json(*cert, checks));
    if (show_table) j["table"] = nlohmann::json::parse(table_to_json(t));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << g.order() << ", " << t.num_classes()
              << " classes, degrees " << degree_pattern_string(t) << "\n";
    if (show_table) std::cout << table_to_text(t);
    if (!cert) {
      std::cout << "CD1: no";
      if (!small_note.empty()) std::cout << " (" << small_note << ")";
      std::cout << "\n";
    } else {
      std::cout << "CD1: yes; a_k=" << cert->a_k << " b_k=" << cert->b_k
                << " p=" << cert->p << " n=" << cert->n << " t=" << cert->t
                << " |N|=" << cert->N_order << "; ";
      Extreme e = classify_extreme(*cert);
      if (e == Extreme::None)
        std::cout << "non-extreme\n";
      else
        std::cout << "extreme (" << extreme_name(e) << ")\n";
      std::size_t bad = 0;
      for (const auto& c : checks)
        if (!c.pass) {
          ++bad;
          std::cout << "FAIL " << c.id << ": " << c.evidence << "\n";
        }
      std::cout << "checks: " << (checks.size() - bad) << "/" << checks.size()
                << " pass\n";
    }
  }
  for (const auto& c : checks)
    if (!c.pass) return 2;
  return 0;
}

Group build_family(const std::string& family, uint64_t q, uint32_t m,
                   const std::string& kind, uint64_t p, uint32_t n,
                   const std::string& matrices) {
  if (family == "cyclic") return cyclic_group(q);
  if (family == "dihedral") return dihedral_group(q);
  if (family == "affine") return affine_line_q(q);
  if (family == "extraspecial") {
    if (kind != "+" && kind != "-")
      throw std::invalid_argument("--kind must be + or -");
    return extraspecial_2group(m, kind[0]);
  }
  if (family == "semidirect") {
    if (matrices.empty())
      throw std::invalid_argument("semidirect needs --matrices <file>");
    return affine_semidirect(p, n, parse_matrix_file(matrices));
  }
  if (family == "order54") {
    if (kind != "exp3" && kind != "exp9")
      throw std::invalid_argument("--kind must be exp3 or exp9 for order54");
    Group p27 = order27_groups()[kind == "exp3" ? 3 : 4];
    auto cands = center_inverted_doubles(p27);
    for (Group& g : cands) {
      CharTable t = character_table(g);
      if (detect_cd1_columns(g, t)) return std::move(g);
    }
    throw std::logic_error("no single-difference double found (internal error)");
  }
  throw std::invalid_argument(
      "unknown family (cyclic, dihedral, affine, extraspecial, semidirect, "
      "order54)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and single-difference column pairs"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, show_table = false;
  auto* analyze = app.add_subcommand("analyze", "analyze a group file");
  analyze->add_option("file", file, "permutation group file")->required();
  analyze->add_flag("--json", json, "machine-readable output");
  analyze->add_flag("--table", show_table, "include the character table");

  std::string family, kind, matrices, out;
  uint64_t q = 0, p = 0;
  uint32_t m = 1, n = 1;
  auto* construct = app.add_subcommand("construct", "build a zoo group");
  construct->add_option("family", family, "family name")->required();
  construct->add_option("--q", q, "order / field size parameter");
  construct->add_option("--m", m, "extraspecial block count");
  construct->add_option("--kind", kind, "+|- or exp3|exp9");
  construct->add_option("--p", p, "kernel characteristic");
  construct->add_option("--n", n, "kernel dimension");
  construct->add_option("--matrices", matrices, "matrix generator file");
  construct->add_option("--out", out, "write the group to this file");
  construct->add_flag("--json", json, "machine-readable output");
  construct->add_flag("--table", show_table, "include the character table");

  std::string corpus;
  bool include_large = false, suite_json = false;
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->add_option("--corpus", corpus, "directory of extra .grp files");
  suite->add_flag("--include-large", include_large,
                  "add the GL(2,29)/GL(2,59) structural cases");
  suite->add_flag("--json", suite_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      return report_group(load_group_file(file), json, show_table);
    }
    if (construct->parsed()) {
      Group g = build_family(family, q, m, kind, p, n, matrices);
      if (!out.empty()) write_group_file(out, g, "constructed: " + family);
      return report_group(g, json, show_table);
    }
    if (suite->parsed()) {
      SuiteOptions opt;
      opt.corpus_dir = corpus;
      opt.include_large = include_large;
      if (!suite_json) {
        opt.on_case = [](const SuiteCase& c) {
          std::cout << (c.pass ? "pass " : "FAIL ") << c.name;
          if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
          std::cout << "\n";
        };
      }
      SuiteReport rep = run_suite(opt);
      if (suite_json) {
        nlohmann::json j;
        j["cases"] = nlohmann::json::array();
        for (const auto& c : rep.cases)
          j["cases"].push_back(
              {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["all_pass"] = rep.all_pass();
        std::cout << j.dump(2) << "\n";
      } else {
        std::size_t bad = 0;
        for (const auto& c : rep.cases)
          if (!c.pass) ++bad;
        std::cout << "suite: " << rep.cases.size() << " cases, " << bad
                  << " failed\n";
      }
      return rep.all_pass() ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
