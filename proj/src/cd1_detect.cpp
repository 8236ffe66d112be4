#include <sstream>
#include <stdexcept>

#include "cd1lab/cd1.hpp"
#include "cd1lab/numutil.hpp"

namespace cd1lab {

static std::runtime_error extraction_fail(const std::string& why) {
  return std::runtime_error("certificate extraction failed: " + why);
}

static void reject_small(const Group& g) {
  if (g.order() <= 2)
    throw std::invalid_argument(
        "group too small: the column condition needs order above 2");
}

// row/column pair established; derive the arithmetic part
static Certificate build_certificate(const Group& g, const CharTable& t,
                                     uint32_t row, uint32_t col_b) {
  Certificate c;
  c.group_order = t.group_order;
  c.num_classes = t.num_classes();
  c.row_k = row;
  c.col_b = col_b;
  c.a_k = t.degree(row);
  const Cyclo& bv = t.rows[row][col_b];
  if (!bv.is_rational() || bv.rational_value() >= 0)
    throw extraction_fail("the lone differing value is not a negative integer");
  c.b_k = bv.rational_value();
  c.b_class_size = t.class_sizes[col_b];
  c.N_order = 1 + c.b_class_size;
  auto npp = prime_power(c.N_order);
  if (!npp) throw extraction_fail("1 + |b^G| is not a prime power");
  c.p = npp->first;
  c.n = npp->second;
  if (c.b_k == -1) {
    c.t = 0;
  } else {
    auto bpp = prime_power(static_cast<uint64_t>(-c.b_k));
    if (!bpp || bpp->first != c.p)
      throw extraction_fail("-b_k is not a power of the kernel prime");
    c.t = bpp->second;
  }
  (void)g;
  return c;
}

std::optional<Certificate> detect_cd1_columns(const Group& g, const CharTable& t) {
  reject_small(g);
  const uint32_t k = t.num_classes();
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t j1 = 0; j1 < k; ++j1)
    for (uint32_t j2 = j1 + 1; j2 < k; ++j2)
      if (column_diff_count(t, j1, j2) == 1) pairs.emplace_back(j1, j2);
  if (pairs.empty()) return std::nullopt;
  for (auto [j1, j2] : pairs) {
    if (j1 != 0) continue;  // the pair must involve the identity column
    uint32_t row = k;
    for (uint32_t i = 0; i < t.num_rows(); ++i)
      if (!(t.rows[i][j1] == t.rows[i][j2])) {
        row = i;
        break;
      }
    return build_certificate(g, t, row, j2);
  }
  throw extraction_fail("a single-difference pair misses the identity column");
}

std::optional<Certificate> detect_cd1_vanishing(const Group& g, const CharTable& t) {
  reject_small(g);
  const uint32_t k = t.num_classes();
  for (uint32_t i = 0; i < t.num_rows(); ++i) {
    std::vector<uint32_t> support;
    for (uint32_t j = 0; j < k; ++j)
      if (!t.rows[i][j].is_zero()) support.push_back(j);
    if (support.size() != 2) continue;
    if (support[0] != 0)
      throw extraction_fail("two-class support misses the identity column");
    return build_certificate(g, t, i, support[1]);
  }
  return std::nullopt;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Extreme classify_extreme(const Certificate& c) {
  if (c.b_k == -1) return Extreme::Frobenius;
  if (c.b_k == -static_cast<long long>(c.a_k)) return Extreme::CentralType;
  return Extreme::None;
}

const char* extreme_name(Extreme e) {
  switch (e) {
    case Extreme::Frobenius: return "frobenius";
    case Extreme::CentralType: return "central-type";
    default: return "none";
  }
}

bool has_distinct_nonlinear_degrees(const CharTable& t) {
  auto ds = degree_multiset(t);
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (ds[i] > 1 && ds[i] == ds[i - 1]) return false;
  return true;
}

}  // namespace cd1lab
