#include <algorithm>
#include <stdexcept>

#include "cd1lab/chartable.hpp"
#include "cd1lab/kernels.hpp"
#include "cd1lab/numutil.hpp"

namespace cd1lab {

static std::runtime_error fail(const std::string& stage) {
  return std::runtime_error("table computation failed: " + stage);
}

// Common eigenvectors of the class matrices over F_ell. The class algebra is
// commutative and split semisimple for our ell, so refining an eigenspace
// decomposition through every class matrix must end with k lines.
static std::vector<std::vector<uint64_t>> common_eigenvectors(
    const std::vector<MatFp>& ms, uint64_t ell) {
  const uint32_t k = ms.empty() ? 1 : ms[0].rows;
  using Basis = std::vector<std::vector<uint64_t>>;
  std::vector<Basis> spaces;
  {
    Basis full(k);
    for (uint32_t i = 0; i < k; ++i) {
      full[i].assign(k, 0);
      full[i][i] = 1;
    }
    spaces.push_back(std::move(full));
  }
  const auto& kn = kern::active();
  for (uint32_t mi = 1; mi < ms.size(); ++mi) {
    bool all_lines = true;
    for (const Basis& b : spaces)
      if (b.size() > 1) all_lines = false;
    if (all_lines) break;

    std::vector<Basis> next;
    for (Basis& b : spaces) {
      const uint32_t d = static_cast<uint32_t>(b.size());
      if (d == 1) {
        next.push_back(std::move(b));
        continue;
      }
      // restricted action: solve B^T x = M v for each basis vector v
      MatFp bt(k, d, ell);
      for (uint32_t c = 0; c < d; ++c)
        for (uint32_t r = 0; r < k; ++r) bt.at(r, c) = b[c][r];
      MatFp restr(d, d, ell);
      for (uint32_t c = 0; c < d; ++c) {
        std::vector<uint64_t> u = ms[mi].apply(b[c]);
        std::vector<uint64_t> x = solve(bt, std::move(u));
        if (x.empty()) throw fail("restricted coordinates");
        for (uint32_t r = 0; r < d; ++r) restr.at(r, c) = x[r];
      }
      std::vector<uint64_t> roots = distinct_roots(charpoly(restr), ell);
      if (roots.empty()) throw fail("restricted matrix has no eigenvalue");
      if (roots.size() == 1) {
        next.push_back(std::move(b));
        continue;
      }
      std::size_t total = 0;
      for (uint64_t lam : roots) {
        MatFp shifted = restr;
        for (uint32_t i = 0; i < d; ++i)
          shifted.at(i, i) = modp::sub(shifted.at(i, i), lam, ell);
        Basis sub;
        for (const auto& y : kernel_basis(std::move(shifted))) {
          std::vector<uint64_t> w(k, 0);
          for (uint32_t s = 0; s < d; ++s)
            if (y[s]) kn.mod_axpy(w.data(), b[s].data(), y[s], k, ell);
          sub.push_back(std::move(w));
        }
        if (sub.empty()) throw fail("empty eigenspace");
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != d) throw fail("eigenspace dimensions do not add up");
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<uint64_t>> lines;
  for (Basis& b : spaces) {
    if (b.size() != 1) throw fail("eigenspace splitting stalled");
    lines.push_back(std::move(b[0]));
  }
  if (lines.size() != k) throw fail("wrong number of eigenlines");
  return lines;
}

CharTable character_table(const Group& g) {
  CharTable t;
  const uint32_t k = g.num_classes();
  t.group_order = g.order();
  t.exponent = static_cast<uint32_t>(g.exponent());
  for (uint32_t j = 0; j < k; ++j) {
    const ConjugacyClass& c = g.classes()[j];
    t.class_sizes.push_back(c.size);
    t.class_reps.push_back(c.rep);
    t.class_orders.push_back(c.element_order);
    t.inverse_classes.push_back(g.inverse_class(j));
  }
  if (g.order() == 1) {
    t.rows = {{Cyclo::integer(1, 1)}};
    return t;
  }

  const uint64_t order = g.order();
  const uint64_t e = g.exponent();
  const uint64_t maxdeg = isqrt(order - 1);
  uint64_t csq = isqrt(order);
  if (csq * csq < order) ++csq;
  // ell = 1 (mod e) makes F_ell a splitting field; the size bound makes the
  // value lift below unambiguous
  const uint64_t ell =
      find_prime_one_mod(e, 2 * csq * maxdeg, kern::max_modulus);

  auto lines = common_eigenvectors(class_matrices(g, ell), ell);

  std::vector<uint64_t> inv_size(k);
  for (uint32_t j = 0; j < k; ++j) inv_size[j] = modp::inv(t.class_sizes[j] % ell, ell);

  // theta: fixed primitive e-th root of unity in F_ell, the modular shadow
  // of z = exp(2*pi*i/e)
  const uint64_t theta = modp::pow(smallest_primitive_root(ell), (ell - 1) / e, ell);
  std::vector<uint64_t> theta_pow(e);
  theta_pow[0] = 1;
  for (uint64_t s = 1; s < e; ++s) theta_pow[s] = theta_pow[s - 1] * theta % ell;

  // class of rep_j^s for s in [0, o(rep_j))
  std::vector<std::vector<uint32_t>> pow_class(k);
  for (uint32_t j = 0; j < k; ++j) {
    uint32_t x = 0;  // identity
    for (uint64_t s = 0; s < t.class_orders[j]; ++s) {
      pow_class[j].push_back(g.class_of(x));
      x = g.mul(x, t.class_reps[j]);
    }
  }

  uint64_t degree_square_sum = 0;
  for (const auto& v : lines) {
    if (v[0] == 0) throw fail("eigenvector vanishes on the identity class");
    uint64_t norm = modp::inv(v[0], ell);
    std::vector<uint64_t> w(k);
    for (uint32_t j = 0; j < k; ++j) w[j] = v[j] * norm % ell;

    uint64_t denom = 0;
    for (uint32_t j = 0; j < k; ++j)
      denom = (denom + w[j] * w[t.inverse_classes[j]] % ell * inv_size[j]) % ell;
    if (denom == 0) throw fail("degree denominator vanished");
    uint64_t dsq = (order % ell) * modp::inv(denom, ell) % ell;
    auto dopt = exact_sqrt(dsq);
    if (!dopt || *dopt == 0 || *dopt > maxdeg) throw fail("degree lift");
    const uint64_t d = *dopt;
    degree_square_sum += d * d;

    std::vector<uint64_t> chi_mod(k);
    for (uint32_t j = 0; j < k; ++j) chi_mod[j] = w[j] * d % ell * inv_size[j] % ell;

    std::vector<Cyclo> row;
    row.reserve(k);
    for (uint32_t j = 0; j < k; ++j) {
      // eigenvalues of rep_j are o-th roots of unity, o = o(rep_j), so only
      // exponents m = (e/o) m' can appear; the multiplicity of z^m is
      // mu = (1/o) sum_{s<o} chi(rep_j^s) theta^(-(e/o) s m')
      const uint64_t o = t.class_orders[j];
      const uint64_t q = e / o;
      const uint64_t inv_o = modp::inv(o % ell, ell);
      Cyclo val = Cyclo::zero(static_cast<uint32_t>(e));
      uint64_t mu_sum = 0;
      for (uint64_t mp = 0; mp < o; ++mp) {
        uint64_t acc = 0;
        for (uint64_t s = 0; s < o; ++s) {
          uint64_t tw = theta_pow[(e - q * (s * mp % o)) % e];
          acc = (acc + chi_mod[pow_class[j][s]] * tw) % ell;
        }
        uint64_t mu = acc * inv_o % ell;
        if (mu > d) throw fail("value lift out of range");
        mu_sum += mu;
        if (mu) val += Cyclo::root(static_cast<uint32_t>(e), q * mp) * (long long)mu;
      }
      if (mu_sum != d) throw fail("value lift multiplicities do not sum to the degree");
      row.push_back(std::move(val));
    }
    t.rows.push_back(std::move(row));
  }
  if (degree_square_sum != order) throw fail("degree squares do not sum to the order");

  std::sort(t.rows.begin(), t.rows.end(),
            [](const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
              long long da = a[0].rational_value(), db = b[0].rational_value();
              if (da != db) return da < db;
              for (std::size_t j = 0; j < a.size(); ++j) {
                int c = compare_coeffs(a[j], b[j]);
                if (c != 0) return c > 0;
              }
              return false;
            });
  for (const Cyclo& v : t.rows[0])
    if (!(v == Cyclo::integer(static_cast<uint32_t>(e), 1)))
      throw fail("principal character not first after sorting");
  return t;
}

}  // namespace cd1lab
