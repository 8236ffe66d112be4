#include <algorithm>
#include <set>
#include <stdexcept>

#include "cd1lab/perm.hpp"

namespace cd1lab {

bool Subgroup::contains(uint32_t e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Subgroup trivial_subgroup() { return Subgroup{{0u}, {}}; }

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.members.resize(g.order());
  for (uint32_t i = 0; i < g.order(); ++i) s.members[i] = i;
  s.gens = g.generator_indices();
  return s;
}

static std::vector<uint32_t> closure_members(const Group& g,
                                             const std::vector<uint32_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<uint32_t> found{0u};
  in[0] = true;
  for (std::size_t at = 0; at < found.size(); ++at) {
    for (uint32_t gen : gens) {
      uint32_t w = g.mul(found[at], gen);
      if (!in[w]) {
        in[w] = true;
        found.push_back(w);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Subgroup subgroup_closure(const Group& g, std::vector<uint32_t> gens) {
  gens.erase(std::remove(gens.begin(), gens.end(), 0u), gens.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Subgroup s;
  s.members = closure_members(g, gens);
  s.gens = std::move(gens);
  return s;
}

// greedy small generating set for a known member list
static std::vector<uint32_t> find_generators(const Group& g,
                                             const std::vector<uint32_t>& members) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> have{0u};
  for (uint32_t m : members) {
    if (std::binary_search(have.begin(), have.end(), m)) continue;
    gens.push_back(m);
    have = closure_members(g, gens);
    if (have.size() == members.size()) break;
  }
  return gens;
}

Subgroup subgroup_from_members(const Group& g, std::vector<uint32_t> members) {
  std::sort(members.begin(), members.end());
  Subgroup s;
  s.gens = find_generators(g, members);
  s.members = std::move(members);
  return s;
}

static Subgroup from_members(const Group& g, std::vector<uint32_t> members) {
  return subgroup_from_members(g, std::move(members));
}

Subgroup cyclic_subgroup(const Group& g, uint32_t e) {
  return subgroup_closure(g, {e});
}

Subgroup centralizer(const Group& g, uint32_t e) {
  std::vector<uint32_t> mem;
  for (uint32_t x = 0; x < g.order(); ++x)
    if (g.mul(x, e) == g.mul(e, x)) mem.push_back(x);
  return from_members(g, std::move(mem));
}

Subgroup centralizer_of_subgroup(const Group& g, const Subgroup& s) {
  const std::vector<uint32_t>& gens =
      s.gens.empty() ? s.members : s.gens;  // trivial subgroup: members = {0}
  std::vector<uint32_t> mem;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (uint32_t e : gens)
      if (g.mul(x, e) != g.mul(e, x)) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(x);
  }
  return from_members(g, std::move(mem));
}

Subgroup center(const Group& g) {
  std::vector<uint32_t> mem;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (uint32_t gen : g.generator_indices())
      if (g.mul(x, gen) != g.mul(gen, x)) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(x);
  }
  return from_members(g, std::move(mem));
}

Subgroup normal_closure(const Group& g, const std::vector<uint32_t>& seed) {
  std::vector<uint32_t> gens;
  for (uint32_t s : seed)
    if (s != 0) gens.push_back(s);
  Subgroup h = subgroup_closure(g, gens);
  // conjugating a generating set into the subgroup suffices for normality
  for (std::size_t at = 0; at < h.gens.size(); ++at) {
    for (uint32_t ggen : g.generator_indices()) {
      uint32_t c = g.conj(h.gens[at], ggen);
      if (!h.contains(c)) {
        std::vector<uint32_t> bigger = h.gens;
        bigger.push_back(c);
        h = subgroup_closure(g, bigger);
        at = std::size_t(-1);  // restart; gens list changed
        break;
      }
    }
  }
  return h;
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<uint32_t> comms;
  const auto& gi = g.generator_indices();
  for (uint32_t a : gi)
    for (uint32_t b : gi) {
      // [a,b] = a^-1 b^-1 a b
      uint32_t c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& s, uint32_t x) {
  Subgroup out;
  out.members.reserve(s.members.size());
  for (uint32_t m : s.members) out.members.push_back(g.conj(m, x));
  std::sort(out.members.begin(), out.members.end());
  for (uint32_t m : s.gens) out.gens.push_back(g.conj(m, x));
  return out;
}

bool is_normal(const Group& g, const Subgroup& s) {
  for (uint32_t sg : s.gens)
    for (uint32_t gg : g.generator_indices())
      if (!s.contains(g.conj(sg, gg))) return false;
  return true;
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  std::vector<uint32_t> mem;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (uint32_t sg : s.gens)
      if (!s.contains(g.conj(sg, x))) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(x);
  }
  return from_members(g, std::move(mem));
}

Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<uint32_t> mem;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(mem));
  return from_members(g, std::move(mem));
}

bool is_abelian(const Group& g) {
  const auto& gi = g.generator_indices();
  for (uint32_t a : gi)
    for (uint32_t b : gi)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian_subgroup(const Group& g, const Subgroup& s) {
  for (uint32_t a : s.gens)
    for (uint32_t b : s.gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

static uint32_t p_adic_valuation(uint64_t v, uint64_t p, uint64_t* rest = nullptr) {
  uint32_t k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  if (rest) *rest = v;
  return k;
}

Subgroup sylow_subgroup(const Group& g, uint64_t p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  uint32_t a = p_adic_valuation(g.order(), p);
  if (a == 0) return trivial_subgroup();
  uint64_t target = 1;
  for (uint32_t i = 0; i < a; ++i) target *= p;

  // seed: a maximal-order p-element (power off the p'-part of some element)
  uint32_t seed = 0;
  uint32_t best_v = 0;
  for (uint32_t x = 0; x < g.order(); ++x) {
    uint64_t rest = 0;
    uint32_t v = p_adic_valuation(g.element_order(x), p, &rest);
    if (v > best_v) {
      best_v = v;
      uint32_t y = 0;  // x^rest has p-power order p^v
      uint32_t base = x;
      uint64_t s = rest;
      y = 0;
      while (s > 0) {
        if (s & 1) y = g.mul(y, base);
        base = g.mul(base, base);
        s >>= 1;
      }
      seed = y;
    }
  }
  Subgroup h = subgroup_closure(g, {seed});

  while (h.order() < target) {
    Subgroup nm = normalizer(g, h);
    uint32_t ext = 0;
    bool found = false;
    for (uint32_t y : nm.members) {
      if (h.contains(y)) continue;
      uint64_t rest = 0;
      p_adic_valuation(g.element_order(y), p, &rest);
      if (rest == 1) {  // p-power order
        ext = y;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("sylow extension stalled (internal error)");
    std::vector<uint32_t> gens = h.gens;
    gens.push_back(ext);
    Subgroup bigger = subgroup_closure(g, gens);
    if (bigger.order() <= h.order() || bigger.order() % p != 0 ||
        [&] {
          uint64_t r;
          p_adic_valuation(bigger.order(), p, &r);
          return r != 1;
        }())
      throw std::runtime_error("sylow extension lost p-group shape (internal error)");
    h = std::move(bigger);
  }
  return h;
}

Subgroup p_core(const Group& g, uint64_t p) {
  Subgroup k = sylow_subgroup(g, p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t gg : g.generator_indices()) {
      std::vector<uint32_t> image;
      image.reserve(k.members.size());
      for (uint32_t m : k.members) image.push_back(g.conj(m, gg));
      std::sort(image.begin(), image.end());
      std::vector<uint32_t> meet;
      std::set_intersection(k.members.begin(), k.members.end(), image.begin(),
                            image.end(), std::back_inserter(meet));
      if (meet.size() != k.members.size()) {
        k.members = std::move(meet);
        changed = true;
      }
    }
  }
  return from_members(g, std::move(k.members));
}

std::optional<std::pair<uint64_t, uint32_t>> elementary_abelian_shape(
    const Group& g, const Subgroup& s) {
  if (s.order() == 1) return std::nullopt;
  uint64_t p = 0;
  for (uint32_t m : s.members)
    if (m != 0) {
      p = g.element_order(m);
      break;
    }
  // p must be prime and every nonidentity element must have order p
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  for (uint32_t m : s.members)
    if (m != 0 && g.element_order(m) != p) return std::nullopt;
  if (!is_abelian_subgroup(g, s)) return std::nullopt;
  uint64_t size = s.order();
  uint32_t n = 0;
  while (size % p == 0) {
    size /= p;
    ++n;
  }
  if (size != 1) return std::nullopt;
  return std::make_pair(p, n);
}

std::vector<Subgroup> subgroups_within(const Group& g, const Subgroup& s,
                                       uint64_t max_subgroups) {
  std::vector<Subgroup> out{trivial_subgroup()};
  std::set<std::vector<uint32_t>> seen{out[0].members};
  for (std::size_t at = 0; at < out.size(); ++at) {
    Subgroup cur = out[at];  // copy: out may reallocate
    for (uint32_t x : s.members) {
      if (cur.contains(x)) continue;
      std::vector<uint32_t> gens = cur.gens;
      gens.push_back(x);
      Subgroup h = subgroup_closure(g, gens);
      // stay inside s
      if (!std::includes(s.members.begin(), s.members.end(), h.members.begin(),
                         h.members.end()))
        continue;
      if (seen.insert(h.members).second) {
        out.push_back(std::move(h));
        if (out.size() > max_subgroups)
          throw std::runtime_error("subgroup enumeration exceeded cap");
      }
    }
  }
  return out;
}

Quotient quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("not normal");
  const uint32_t order = static_cast<uint32_t>(g.order());
  const uint32_t nsize = static_cast<uint32_t>(n.order());
  const uint32_t ncosets = order / nsize;

  constexpr uint32_t unset = 0xffffffffu;
  std::vector<uint32_t> coset_id(order, unset);
  std::vector<uint32_t> reps;
  reps.reserve(ncosets);
  for (uint32_t e = 0; e < order; ++e) {
    if (coset_id[e] != unset) continue;
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(e);
    for (uint32_t m : n.members) coset_id[g.mul(e, m)] = id;
  }

  // left-multiplication action on left cosets; kernel is exactly n
  std::vector<Perm> qgens;
  for (uint32_t gg : g.generator_indices()) {
    std::vector<uint32_t> img(ncosets);
    for (uint32_t c = 0; c < ncosets; ++c) img[c] = coset_id[g.mul(gg, reps[c])];
    qgens.emplace_back(std::move(img));
  }
  Group q = Group::from_generators(ncosets, std::move(qgens), ncosets);

  // the action is regular, so a quotient element is pinned by its image of
  // the identity coset
  std::vector<uint32_t> elem_at_point(ncosets);
  for (uint32_t i = 0; i < q.order(); ++i)
    elem_at_point[q.elements()[i](coset_id[0])] = i;

  Quotient out{std::move(q), std::vector<uint32_t>(order)};
  for (uint32_t e = 0; e < order; ++e)
    out.coset_of[e] = elem_at_point[coset_id[e]];
  return out;
}

Group direct_product(const Group& a, const Group& b) {
  const uint32_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<uint32_t> img(da + db);
    for (uint32_t i = 0; i < da; ++i) img[i] = g(i);
    for (uint32_t i = 0; i < db; ++i) img[da + i] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<uint32_t> img(da + db);
    for (uint32_t i = 0; i < da; ++i) img[i] = i;
    for (uint32_t i = 0; i < db; ++i) img[da + i] = da + g(i);
    gens.emplace_back(std::move(img));
  }
  return Group::from_generators(da + db, std::move(gens),
                                a.order() * b.order());
}

}  // namespace cd1lab
