#include <stdexcept>

#include "cd1lab/cd1.hpp"
#include "cd1lab/numutil.hpp"
#include "json.hpp"

namespace cd1lab {

static uint32_t pow_elem(const Group& g, uint32_t x, uint64_t e) {
  uint32_t r = 0;
  while (e) {
    if (e & 1) r = g.mul(r, x);
    x = g.mul(x, x);
    e >>= 1;
  }
  return r;
}

std::optional<FrobeniusWitness> doubly_transitive_frobenius(const Group& g) {
  const uint64_t order = g.order();
  // order = q(q-1) for a prime power q >= 3
  uint64_t q = (1 + isqrt(1 + 4 * order)) / 2;
  if (q < 3 || q * (q - 1) != order) return std::nullopt;
  auto pp = prime_power(q);
  if (!pp) return std::nullopt;
  const uint64_t p = pp->first;

  Subgroup f = p_core(g, p);
  if (f.order() != q) return std::nullopt;
  if (!elementary_abelian_shape(g, f)) return std::nullopt;
  // fixed-point-free action: nothing outside the kernel centralizes any of
  // its nontrivial elements
  for (uint32_t x : f.members) {
    if (x == 0) continue;
    for (uint32_t y = 0; y < order; ++y)
      if (g.mul(x, y) == g.mul(y, x) && !f.contains(y)) return std::nullopt;
  }

  // complement, fast path: a point stabilizer of the right size
  for (uint32_t pt = 0; pt < g.degree(); ++pt) {
    std::vector<uint32_t> stab;
    for (uint32_t x = 0; x < order; ++x)
      if (g.elements()[x](pt) == pt) stab.push_back(x);
    if (stab.size() != q - 1) continue;
    Subgroup h = subgroup_from_members(g, std::move(stab));
    if (intersect(g, h, f).order() == 1) return FrobeniusWitness{f, h};
  }

  // complement by averaging a factor set over the abelian kernel:
  // t'_c = sigma(c)^(-h') t_c with sigma(c) = prod_d t_c t_d t_{cd}^(-1)
  // and h h' = 1 (mod p) turns a transversal into a homomorphism
  Quotient qt = quotient_group(g, f);
  const Group& quo = qt.group;
  const uint64_t h = quo.order();
  std::vector<uint32_t> tr(h, UINT32_MAX);
  for (uint32_t x = 0; x < order; ++x)
    if (tr[qt.coset_of[x]] == UINT32_MAX) tr[qt.coset_of[x]] = x;
  const uint64_t hp = modp::inv(h % p, p);
  std::vector<uint32_t> tprime(h);
  for (uint32_t c = 0; c < h; ++c) {
    uint32_t sigma = 0;
    for (uint32_t d = 0; d < h; ++d) {
      uint32_t fcd =
          g.mul(g.mul(tr[c], tr[d]), g.inv(tr[quo.mul(c, d)]));
      sigma = g.mul(sigma, fcd);
    }
    tprime[c] = g.mul(pow_elem(g, sigma, p - hp), tr[c]);
  }
  for (uint32_t c = 0; c < h; ++c)
    for (uint32_t d = 0; d < h; ++d)
      if (g.mul(tprime[c], tprime[d]) != tprime[quo.mul(c, d)])
        throw std::runtime_error("complement construction failed (internal error)");
  Subgroup comp = subgroup_from_members(g, tprime);
  if (comp.order() != q - 1 || intersect(g, comp, f).order() != 1)
    throw std::runtime_error("complement construction failed (internal error)");
  return FrobeniusWitness{std::move(f), std::move(comp)};
}

std::string certificate_to_json(const Certificate& c,
                                const std::vector<CheckResult>& checks) {
  nlohmann::json j;
  j["order"] = c.group_order;
  j["num_classes"] = c.num_classes;
  j["row_k"] = c.row_k;
  j["col_b"] = c.col_b;
  j["a_k"] = c.a_k;
  j["b_k"] = c.b_k;
  j["b_class_size"] = c.b_class_size;
  j["p"] = c.p;
  j["n"] = c.n;
  j["t"] = c.t;
  j["N_order"] = c.N_order;
  j["extreme_class"] = extreme_name(classify_extreme(c));
  j["all_pass"] = all_pass(checks);
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& r : checks)
    j["checks"].push_back(
        {{"id", r.id}, {"pass", r.pass}, {"evidence", r.evidence}});
  return j.dump(2);
}

}  // namespace cd1lab
