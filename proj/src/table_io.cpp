#include <sstream>
#include <stdexcept>

#include "cd1lab/chartable.hpp"
#include "json.hpp"

namespace cd1lab {

std::vector<uint64_t> degree_multiset(const CharTable& t) {
  std::vector<uint64_t> ds;
  ds.reserve(t.num_rows());
  for (uint32_t i = 0; i < t.num_rows(); ++i) ds.push_back(t.degree(i));
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::string degree_pattern_string(const CharTable& t) {
  auto ds = degree_multiset(t);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ds.size();) {
    std::size_t j = i;
    while (j < ds.size() && ds[j] == ds[i]) ++j;
    if (i) os << ",";
    os << ds[i];
    if (j - i > 1) os << "^(" << (j - i) << ")";
    i = j;
  }
  os << ")";
  return os.str();
}

uint32_t column_diff_count(const CharTable& t, uint32_t j1, uint32_t j2) {
  uint32_t n = 0;
  for (uint32_t i = 0; i < t.num_rows(); ++i)
    if (!(t.rows[i][j1] == t.rows[i][j2])) ++n;
  return n;
}

Subgroup kernel_of_row(const Group& g, const CharTable& t, uint32_t i) {
  const Cyclo top = Cyclo::integer(t.exponent, (long long)t.degree(i));
  std::vector<bool> in_kernel(t.num_classes(), false);
  for (uint32_t j = 0; j < t.num_classes(); ++j)
    in_kernel[j] = t.rows[i][j] == top;
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < g.order(); ++x)
    if (in_kernel[g.class_of(x)]) members.push_back(x);
  return subgroup_from_members(g, std::move(members));
}

Cyclo inner_product(const CharTable& t, const std::vector<Cyclo>& a,
                    const std::vector<Cyclo>& b) {
  Cyclo acc = Cyclo::zero(t.exponent);
  for (uint32_t j = 0; j < t.num_classes(); ++j)
    acc += a[j] * b[t.inverse_classes[j]] * (long long)t.class_sizes[j];
  auto q = divide_exact(acc, (long long)t.group_order);
  if (!q) throw std::logic_error("inner product is not integral");
  return *q;
}

std::string table_to_json(const CharTable& t) {
  nlohmann::json j;
  j["order"] = t.group_order;
  j["exponent"] = t.exponent;
  j["num_classes"] = t.num_classes();
  j["classes"] = nlohmann::json::array();
  for (uint32_t c = 0; c < t.num_classes(); ++c)
    j["classes"].push_back({{"size", t.class_sizes[c]},
                            {"rep_order", t.class_orders[c]},
                            {"inverse_class", t.inverse_classes[c]}});
  j["characters"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Cyclo& v : row) {
      if (v.is_rational())
        r.push_back(v.rational_value());
      else
        r.push_back({{"c", v.coeffs()}});
    }
    j["characters"].push_back(std::move(r));
  }
  return j.dump(2);
}

std::string table_to_text(const CharTable& t) {
  const uint32_t k = t.num_classes();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"size"};
  for (uint32_t j = 0; j < k; ++j) head.push_back(std::to_string(t.class_sizes[j]));
  cells.push_back(std::move(head));
  std::vector<std::string> ord{"order"};
  for (uint32_t j = 0; j < k; ++j) ord.push_back(std::to_string(t.class_orders[j]));
  cells.push_back(std::move(ord));
  for (uint32_t i = 0; i < t.num_rows(); ++i) {
    std::vector<std::string> r{"X" + std::to_string(i)};
    for (uint32_t j = 0; j < k; ++j) r.push_back(t.rows[i][j].to_string());
    cells.push_back(std::move(r));
  }
  std::vector<std::size_t> w(k + 1, 0);
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << std::string(w[c] - r[c].size(), ' ') << r[c];
      os << (c + 1 == r.size() ? "\n" : "  ");
    }
  }
  return os.str();
}

}  // namespace cd1lab
