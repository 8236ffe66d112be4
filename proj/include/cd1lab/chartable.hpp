#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cd1lab/cyclotomic.hpp"
#include "cd1lab/modlinalg.hpp"
#include "cd1lab/perm.hpp"

namespace cd1lab {

// Exact character table. Column order matches Group::classes(); rows are
// sorted by (degree ascending, then coefficient vectors lexicographically
// descending), which puts the principal character first.
struct CharTable {
  uint64_t group_order = 1;
  uint32_t exponent = 1;  // cyclotomic level of every value
  std::vector<uint64_t> class_sizes;
  std::vector<uint32_t> class_reps;      // element indices
  std::vector<uint64_t> class_orders;    // element orders
  std::vector<uint32_t> inverse_classes;
  std::vector<std::vector<Cyclo>> rows;

  uint32_t num_classes() const { return static_cast<uint32_t>(class_sizes.size()); }
  uint32_t num_rows() const { return static_cast<uint32_t>(rows.size()); }
  uint64_t degree(uint32_t i) const { return rows[i][0].rational_value(); }
};

// Structure constants of the class algebra, reduced mod ell:
// result[i](j,l) = #{(x,y) in C_i x C_j : x y = rep_l}.
std::vector<MatFp> class_matrices(const Group& g, uint64_t ell);

// Exact table via modular eigenvector computation and cyclotomic lifting.
// Throws std::runtime_error beginning "table computation failed" if any
// internal stage cannot complete.
CharTable character_table(const Group& g);

// --- table utilities ---

// sorted multiset of degrees
std::vector<uint64_t> degree_multiset(const CharTable& t);
// "(1^(4),2,8)" style: exponents only when a degree repeats
std::string degree_pattern_string(const CharTable& t);

// number of rows where columns j1 and j2 differ
uint32_t column_diff_count(const CharTable& t, uint32_t j1, uint32_t j2);

// elements x with row_i(class of x) = degree(i)
Subgroup kernel_of_row(const Group& g, const CharTable& t, uint32_t i);

// (1/|G|) sum_j |C_j| a[j] b[j*]  (exact; throws if not integral)
Cyclo inner_product(const CharTable& t, const std::vector<Cyclo>& a,
                    const std::vector<Cyclo>& b);

// serialized table: order, exponent, classes, rows (coefficient vectors,
// rationals shortened to plain integers)
std::string table_to_json(const CharTable& t);
std::string table_to_text(const CharTable& t);

}  // namespace cd1lab
