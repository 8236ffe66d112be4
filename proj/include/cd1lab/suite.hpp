#pragma once
#include <functional>
#include <string>
#include <vector>

namespace cd1lab {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::string corpus_dir;      // directory of extra .grp files to scan
  bool include_large = false;  // GL(2,29) / GL(2,59) structural searches
  std::function<void(const SuiteCase&)> on_case;  // streaming hook
};

struct SuiteReport {
  std::vector<SuiteCase> cases;
  bool all_pass() const;
};

// Builds the witness corpus, runs both detectors on every member, verifies
// every certificate check on the positives, and runs the corpus-wide scans
// (center dichotomy, |N| = 3 forcing, distinct-degree classification).
// Throws parse_error if a corpus-directory file is malformed.
SuiteReport run_suite(const SuiteOptions& opt = {});

}  // namespace cd1lab
