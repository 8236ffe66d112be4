#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cd1lab/chartable.hpp"
#include "cd1lab/perm.hpp"

namespace cd1lab {

// Numerical certificate extracted when two character-table columns differ in
// exactly one entry. Column col_b is the non-identity column of the pair,
// row_k the single row where they disagree; there -b_k = p^t and the classes
// fused with the identity form a normal subgroup of order p^n.
struct Certificate {
  uint64_t group_order = 0;
  uint32_t num_classes = 0;
  uint32_t row_k = 0;
  uint32_t col_b = 0;
  uint64_t a_k = 0;        // degree of row_k, the largest degree
  long long b_k = 0;       // the lone differing value, a negative integer
  uint64_t b_class_size = 0;
  uint64_t p = 0;
  uint32_t n = 0;
  uint32_t t = 0;
  uint64_t N_order = 0;    // p^n = 1 + b_class_size
};

// Both detectors throw std::invalid_argument("group too small...") for
// |G| <= 2, where the column condition degenerates.
//
// Column-pair scan: some pair of columns differs in exactly one entry.
std::optional<Certificate> detect_cd1_columns(const Group& g, const CharTable& t);
// Vanishing-row scan: some character is supported on exactly two classes.
// Equivalent to the column condition; the suite checks both agree.
std::optional<Certificate> detect_cd1_vanishing(const Group& g, const CharTable& t);

struct CheckResult {
  std::string id;
  bool pass;
  std::string evidence;
};
bool all_pass(const std::vector<CheckResult>& checks);

// Every structural statement the certificate promises, verified directly on
// the group and its table. Ids are stable slugs (see README for the list).
std::vector<CheckResult> verify_certificate(const Group& g, const CharTable& t,
                                            const Certificate& c);

// b_k = -1 and b_k = -a_k are the two extreme values of the lone entry.
enum class Extreme { Frobenius, CentralType, None };
Extreme classify_extreme(const Certificate& c);
const char* extreme_name(Extreme e);

struct FrobeniusWitness {
  Subgroup kernel;      // regular normal elementary abelian subgroup, order q
  Subgroup complement;  // order q-1, meets the kernel trivially
};
// Sharply 2-transitive shape: |G| = q(q-1) with the complement acting on the
// kernel without fixed points. Returns the kernel/complement pair if G has
// this structure.
std::optional<FrobeniusWitness> doubly_transitive_frobenius(const Group& g);

// all degrees > 1 pairwise distinct
bool has_distinct_nonlinear_degrees(const CharTable& t);

std::string certificate_to_json(const Certificate& c,
                                const std::vector<CheckResult>& checks);

}  // namespace cd1lab
