#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "cd1lab/perm.hpp"

namespace cd1lab {

uint64_t Group::default_element_cap() {
  static const uint64_t cap = [] {
    if (const char* s = std::getenv("CD1LAB_ELEMENT_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end == s || *end != '\0' || v == 0)
        throw std::runtime_error("bad CD1LAB_ELEMENT_CAP value");
      return uint64_t(v);
    }
    return uint64_t(100000);
  }();
  return cap;
}

Group Group::from_generators(uint32_t degree, std::vector<Perm> gens,
                             uint64_t element_cap) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");

  Group grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(gens);

  grp.elements_.push_back(Perm(degree));
  grp.index_.emplace(grp.elements_[0], 0u);
  // breadth-first from the identity, generators in given order
  for (uint32_t at = 0; at < grp.elements_.size(); ++at) {
    for (const Perm& g : grp.gens_) {
      Perm w = grp.elements_[at] * g;
      auto [it, fresh] = grp.index_.emplace(std::move(w), uint32_t(grp.elements_.size()));
      if (fresh) {
        grp.elements_.push_back(it->first);
        if (grp.elements_.size() > element_cap)
          throw std::runtime_error("group too large (element cap " +
                                   std::to_string(element_cap) + " exceeded)");
      }
    }
  }

  grp.gen_idx_.reserve(grp.gens_.size());
  for (const Perm& g : grp.gens_) grp.gen_idx_.push_back(grp.index_.at(g));

  const std::size_t n = grp.elements_.size();
  grp.inv_.resize(n);
  grp.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grp.inv_[i] = grp.index_.at(grp.elements_[i].inverse());
    grp.orders_[i] = grp.elements_[i].order();
    grp.exponent_ = std::lcm(grp.exponent_, grp.orders_[i]);
  }

  grp.compute_classes();
  return grp;
}

std::optional<uint32_t> Group::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("element not in group");
  return it->second;
}

uint32_t Group::mul(uint32_t a, uint32_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

uint32_t Group::conj(uint32_t x, uint32_t g) const {
  return mul(mul(inv_[g], x), g);
}

void Group::compute_classes() {
  const uint32_t n = static_cast<uint32_t>(elements_.size());
  class_of_.assign(n, 0);
  std::vector<bool> seen(n, false);

  std::vector<Perm> gen_invs;
  gen_invs.reserve(gens_.size());
  for (const Perm& g : gens_) gen_invs.push_back(g.inverse());

  std::vector<ConjugacyClass> raw;
  for (uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      const Perm& x = elements_[orbit[at]];
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        uint32_t y = index_.at(gen_invs[gi] * x * gens_[gi]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass c;
    c.rep = orbit.front();
    c.size = orbit.size();
    c.element_order = orders_[orbit.front()];
    c.members = std::move(orbit);
    raw.push_back(std::move(c));
  }

  std::sort(raw.begin(), raw.end(), [](const ConjugacyClass& a,
                                       const ConjugacyClass& b) {
    bool aid = a.rep == 0, bid = b.rep == 0;
    if (aid != bid) return aid;
    return std::tie(a.size, a.element_order, a.rep) <
           std::tie(b.size, b.element_order, b.rep);
  });

  classes_ = std::move(raw);
  for (uint32_t c = 0; c < classes_.size(); ++c)
    for (uint32_t m : classes_[c].members) class_of_[m] = c;
}

uint32_t Group::inverse_class(uint32_t c) const {
  return class_of_[inv_[classes_[c].rep]];
}

uint32_t Group::power_class(uint32_t c, uint64_t s) const {
  uint64_t o = classes_[c].element_order;
  s %= o;
  uint32_t acc = 0;  // identity
  uint32_t base = classes_[c].rep;
  while (s > 0) {
    if (s & 1) acc = mul(acc, base);
    base = mul(base, base);
    s >>= 1;
  }
  return class_of_[acc];
}

}  // namespace cd1lab
