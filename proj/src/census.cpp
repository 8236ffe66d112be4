#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cd1lab/census.hpp"
#include "cd1lab/zoo.hpp"

namespace cd1lab {
namespace {

// dense multiplication table; the hash-map lookups in Group::mul are too
// slow for the tuple searches below
struct MulTable {
  uint32_t n = 0;
  std::vector<uint32_t> t;
  uint32_t mul(uint32_t a, uint32_t b) const { return t[std::size_t(a) * n + b]; }
};

MulTable mul_table(const Group& g) {
  MulTable m;
  m.n = static_cast<uint32_t>(g.order());
  m.t.resize(std::size_t(m.n) * m.n);
  for (uint32_t a = 0; a < m.n; ++a)
    for (uint32_t b = 0; b < m.n; ++b) m.t[std::size_t(a) * m.n + b] = g.mul(a, b);
  return m;
}

struct Spanning {
  std::vector<uint32_t> gens;    // small generating set, identity excluded
  std::vector<uint32_t> vorder;  // BFS visit order, vorder[0] == 0
  std::vector<uint32_t> parent;
  std::vector<uint32_t> via;     // generator slot that discovered the element
};

Spanning spanning(const Group& g, const MulTable& mt) {
  const uint32_t n = mt.n;
  Spanning s;
  std::vector<uint32_t> all(n);
  for (uint32_t i = 0; i < n; ++i) all[i] = i;
  for (uint32_t e : subgroup_from_members(g, all).gens)
    if (e != 0) s.gens.push_back(e);
  s.parent.assign(n, 0);
  s.via.assign(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  s.vorder.push_back(0);
  for (std::size_t head = 0; head < s.vorder.size(); ++head) {
    uint32_t x = s.vorder[head];
    for (std::size_t gi = 0; gi < s.gens.size(); ++gi) {
      uint32_t y = mt.mul(x, s.gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        s.parent[y] = x;
        s.via[y] = static_cast<uint32_t>(gi);
        s.vorder.push_back(y);
      }
    }
  }
  if (s.vorder.size() != n)
    throw std::logic_error("spanning tree incomplete (internal error)");
  return s;
}

// extends generator images along the spanning tree; true iff the extension
// is a bijective homomorphism onto mb's group, in which case f holds it
bool extend_check(const MulTable& ma, const Spanning& sp, const MulTable& mb,
                  const std::vector<uint32_t>& img, std::vector<uint32_t>& f) {
  const uint32_t n = ma.n;
  f.assign(n, 0);
  std::vector<char> hit(n, 0);
  hit[0] = 1;
  for (std::size_t i = 1; i < sp.vorder.size(); ++i) {
    uint32_t y = sp.vorder[i];
    uint32_t fy = mb.mul(f[sp.parent[y]], img[sp.via[y]]);
    f[y] = fy;
    if (hit[fy]) return false;
    hit[fy] = 1;
  }
  // f(x*s) = f(x)f(s) for every x and generator s forces multiplicativity
  for (uint32_t x = 0; x < n; ++x)
    for (std::size_t gi = 0; gi < sp.gens.size(); ++gi)
      if (f[ma.mul(x, sp.gens[gi])] != mb.mul(f[x], img[gi])) return false;
  return true;
}

// images must share element order and class size with the generator
std::vector<std::vector<uint32_t>> candidate_lists(const Group& a,
                                                   const Spanning& sp,
                                                   const Group& b) {
  std::vector<std::vector<uint32_t>> cands;
  for (uint32_t ge : sp.gens) {
    uint64_t ord = a.element_order(ge);
    uint64_t csz = a.classes()[a.class_of(ge)].size;
    std::vector<uint32_t> list;
    for (uint32_t e = 0; e < b.order(); ++e)
      if (b.element_order(e) == ord && b.classes()[b.class_of(e)].size == csz)
        list.push_back(e);
    if (list.empty()) return {};
    cands.push_back(std::move(list));
  }
  return cands;
}

bool odometer_step(std::vector<std::size_t>& idx,
                   const std::vector<std::vector<uint32_t>>& cands) {
  std::size_t at = 0;
  while (at < idx.size() && ++idx[at] == cands[at].size()) idx[at++] = 0;
  return at < idx.size();
}

std::vector<uint64_t> sorted_orders(const Group& g,
                                    const std::vector<uint32_t>& members) {
  std::vector<uint64_t> os;
  os.reserve(members.size());
  for (uint32_t e : members) os.push_back(g.element_order(e));
  std::sort(os.begin(), os.end());
  return os;
}

}  // namespace

std::vector<std::vector<uint32_t>> automorphisms(const Group& g) {
  const uint32_t n = static_cast<uint32_t>(g.order());
  if (n == 1) return {{0u}};
  MulTable mt = mul_table(g);
  Spanning sp = spanning(g, mt);
  auto cands = candidate_lists(g, sp, g);
  std::vector<std::vector<uint32_t>> out;
  std::vector<std::size_t> idx(sp.gens.size(), 0);
  std::vector<uint32_t> img(sp.gens.size());
  std::vector<uint32_t> f;
  do {
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = cands[i][idx[i]];
    if (extend_check(mt, sp, mt, img, f)) out.push_back(f);
  } while (odometer_step(idx, cands));
  return out;
}

bool isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (a.order() == 1) return true;
  if (a.exponent() != b.exponent() || a.num_classes() != b.num_classes())
    return false;
  std::vector<uint32_t> all(a.order());
  for (uint32_t i = 0; i < a.order(); ++i) all[i] = i;
  if (sorted_orders(a, all) != sorted_orders(b, all)) return false;
  bool abel = is_abelian(a);
  if (abel != is_abelian(b)) return false;
  // an abelian group is pinned down by its element-order multiset
  if (abel) return true;

  MulTable ma = mul_table(a), mb = mul_table(b);
  Spanning sp = spanning(a, ma);
  auto cands = candidate_lists(a, sp, b);
  if (cands.empty()) return false;
  std::vector<std::size_t> idx(sp.gens.size(), 0);
  std::vector<uint32_t> img(sp.gens.size());
  std::vector<uint32_t> f;
  do {
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = cands[i][idx[i]];
    if (extend_check(ma, sp, mb, img, f)) return true;
  } while (odometer_step(idx, cands));
  return false;
}

namespace {

// isomorphism-invariant bucket key: order data plus class colors refined
// through the power maps until stable (colors are ranks, so canonical)
std::string fingerprint(const Group& g) {
  std::vector<uint64_t> v;
  v.push_back(g.order());
  v.push_back(g.exponent());
  std::vector<uint32_t> all(g.order());
  for (uint32_t i = 0; i < g.order(); ++i) all[i] = i;
  for (uint64_t o : sorted_orders(g, all)) v.push_back(o);
  v.push_back(center(g).order());
  Subgroup der = derived_subgroup(g);
  v.push_back(der.order());
  for (uint64_t o : sorted_orders(g, der.members)) v.push_back(o);

  const uint32_t k = g.num_classes();
  std::vector<uint64_t> color(k);
  {
    std::vector<std::pair<uint64_t, uint64_t>> init(k);
    for (uint32_t c = 0; c < k; ++c)
      init[c] = {g.classes()[c].size, g.classes()[c].element_order};
    std::vector<std::pair<uint64_t, uint64_t>> sorted = init;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (uint32_t c = 0; c < k; ++c)
      color[c] = std::lower_bound(sorted.begin(), sorted.end(), init[c]) -
                 sorted.begin();
  }
  for (uint32_t round = 0; round < k; ++round) {
    std::vector<std::vector<uint64_t>> sig(k);
    for (uint32_t c = 0; c < k; ++c) {
      sig[c].push_back(color[c]);
      uint64_t o = g.classes()[c].element_order;
      for (uint64_t m = 2; m < o; ++m)
        sig[c].push_back(color[g.power_class(c, m)]);
    }
    std::vector<std::vector<uint64_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<uint64_t> next(k);
    for (uint32_t c = 0; c < k; ++c)
      next[c] = std::lower_bound(sorted.begin(), sorted.end(), sig[c]) -
                sorted.begin();
    if (next == color) break;
    color = std::move(next);
  }
  std::vector<uint64_t> hist = color;
  std::sort(hist.begin(), hist.end());
  v.push_back(0xC01053);  // separator
  for (uint64_t c : hist) v.push_back(c);

  std::string s(v.size() * sizeof(uint64_t), '\0');
  std::memcpy(s.data(), v.data(), s.size());
  return s;
}

}  // namespace

std::vector<Group> dedupe_groups(const std::vector<Group>& groups) {
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::vector<Group> kept;
  for (const Group& g : groups) {
    auto& reps = buckets[fingerprint(g)];
    bool dup = false;
    for (std::size_t ri : reps)
      if (isomorphic(kept[ri], g)) {
        dup = true;
        break;
      }
    if (!dup) {
      reps.push_back(kept.size());
      kept.push_back(g);
    }
  }
  return kept;
}

namespace {

// group (a, e) | (t), t^2 = (z, 0), t(b,0)t^-1 = (phi(b), 0), acting on
// 2|a| points (element, coset bit) by left multiplication
Group build_extension(const Group& a, const std::vector<uint32_t>& phi,
                      uint32_t z) {
  const uint32_t n = static_cast<uint32_t>(a.order());
  auto enc = [n](uint32_t e, uint32_t eps) { return eps * n + e; };
  std::vector<Perm> gens;
  for (uint32_t gi : a.generator_indices()) {
    std::vector<uint32_t> img(2 * n);
    for (uint32_t b = 0; b < n; ++b) {
      img[enc(b, 0)] = enc(a.mul(gi, b), 0);
      img[enc(b, 1)] = enc(a.mul(gi, b), 1);
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<uint32_t> img(2 * n);
  for (uint32_t b = 0; b < n; ++b) {
    img[enc(b, 0)] = enc(phi[b], 1);
    img[enc(b, 1)] = enc(a.mul(phi[b], z), 0);
  }
  gens.emplace_back(std::move(img));
  Group ext = Group::from_generators(2 * n, std::move(gens));
  if (ext.order() != 2ull * n)
    throw std::logic_error("extension build produced wrong order (internal error)");
  return ext;
}

}  // namespace

std::vector<Group> extensions_by_c2(const Group& a) {
  const uint32_t n = static_cast<uint32_t>(a.order());
  auto auts = automorphisms(a);
  std::vector<Group> out;
  std::vector<uint32_t> phi2(n);
  for (const auto& phi : auts) {
    for (uint32_t x = 0; x < n; ++x) phi2[x] = phi[phi[x]];
    for (uint32_t z = 0; z < n; ++z) {
      if (phi[z] != z) continue;  // t z t^-1 = t t^2 t^-1 = z is forced
      bool ok = true;
      for (uint32_t x = 0; x < n && ok; ++x)
        if (phi2[x] != a.mul(a.mul(z, x), a.inv(z))) ok = false;
      if (ok) out.push_back(build_extension(a, phi, z));
    }
  }
  return out;
}

std::vector<Group> two_group_census(uint32_t k) {
  if (k < 1 || k > 5)
    throw std::invalid_argument("two_group_census supports k between 1 and 5");
  std::vector<Group> cur;
  cur.push_back(cyclic_group(2));
  for (uint32_t i = 2; i <= k; ++i) {
    std::vector<Group> next;
    for (const Group& a : cur)
      for (Group& e : extensions_by_c2(a)) next.push_back(std::move(e));
    cur = dedupe_groups(next);
  }
  return cur;
}

std::vector<Group> order54_census() {
  std::vector<Group> all;
  for (const Group& a : order27_groups())
    for (Group& e : extensions_by_c2(a)) all.push_back(std::move(e));
  return dedupe_groups(all);
}

std::vector<Group> center_inverted_doubles(const Group& p) {
  const uint32_t n = static_cast<uint32_t>(p.order());
  Subgroup z = center(p);
  std::vector<Group> out;
  for (const auto& f : automorphisms(p)) {
    bool ok = true;
    for (uint32_t x = 0; x < n && ok; ++x) ok = f[f[x]] == x;
    for (std::size_t i = 0; i < z.members.size() && ok; ++i)
      ok = f[z.members[i]] == p.inv(z.members[i]);
    if (!ok) continue;
    bool ident = true;
    for (uint32_t x = 0; x < n && ident; ++x) ident = f[x] == x;
    if (ident) continue;
    out.push_back(build_extension(p, f, 0));
  }
  return dedupe_groups(out);
}

}  // namespace cd1lab
