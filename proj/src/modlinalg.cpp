#include "cd1lab/modlinalg.hpp"

#include <random>
#include <stdexcept>

#include "cd1lab/kernels.hpp"
#include "cd1lab/numutil.hpp"

namespace cd1lab {

namespace modp {

uint64_t pow(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

uint64_t inv(uint64_t a, uint64_t m) { return pow(a % m, m - 2, m); }

}  // namespace modp

MatFp MatFp::identity(uint32_t n, uint64_t m) {
  MatFp r(n, n, m);
  for (uint32_t i = 0; i < n; ++i) r.at(i, i) = 1 % m;
  return r;
}

MatFp MatFp::mul(const MatFp& o) const {
  if (cols != o.rows || m != o.m) throw std::logic_error("matmul shape mismatch");
  MatFp r(rows, o.cols, m);
  const auto& k = kern::active();
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t t = 0; t < cols; ++t) {
      uint64_t f = at(i, t);
      if (f) k.mod_axpy(r.row(i), o.row(t), f, o.cols, m);
    }
  return r;
}

std::vector<uint64_t> MatFp::apply(const std::vector<uint64_t>& v) const {
  if (v.size() != cols) throw std::logic_error("matvec shape mismatch");
  const auto& k = kern::active();
  std::vector<uint64_t> r(rows);
  for (uint32_t i = 0; i < rows; ++i) r[i] = k.mod_dot(row(i), v.data(), cols, m);
  return r;
}

// elimination core: reduce in place to row echelon form, returning the pivot
// column of each pivot row and the accumulated det sign/scale if wanted
static void eliminate(MatFp& a, std::vector<uint32_t>& pivot_cols,
                      uint64_t* det_out) {
  const auto& k = kern::active();
  uint64_t d = 1 % a.m;
  uint32_t r = 0;
  pivot_cols.clear();
  for (uint32_t c = 0; c < a.cols && r < a.rows; ++c) {
    uint32_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) {
      det_out ? void(d = 0) : void();
      continue;
    }
    if (p != r) {
      for (uint32_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
      d = a.m - d;
      if (d == a.m) d = 0;
    }
    uint64_t lead = a.at(r, c);
    d = d * lead % a.m;
    uint64_t il = modp::inv(lead, a.m);
    for (uint32_t j = c; j < a.cols; ++j) a.at(r, j) = a.at(r, j) * il % a.m;
    for (uint32_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      uint64_t f = a.m - a.at(i, c);
      k.mod_axpy(a.row(i) + c, a.row(r) + c, f, a.cols - c, a.m);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (det_out) *det_out = (r == a.rows && a.rows == a.cols) ? d : 0;
}

uint64_t det(MatFp a) {
  if (a.rows != a.cols) throw std::logic_error("det of non-square matrix");
  std::vector<uint32_t> piv;
  uint64_t d = 0;
  eliminate(a, piv, &d);
  return d;
}

std::vector<std::vector<uint64_t>> kernel_basis(MatFp a) {
  std::vector<uint32_t> piv;
  eliminate(a, piv, nullptr);
  std::vector<bool> is_pivot(a.cols, false);
  for (uint32_t c : piv) is_pivot[c] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (uint32_t fc = 0; fc < a.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint64_t> v(a.cols, 0);
    v[fc] = 1;
    for (uint32_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = (a.m - a.at(r, fc)) % a.m;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<uint64_t> solve(MatFp a, std::vector<uint64_t> b) {
  if (b.size() != a.rows) throw std::logic_error("solve shape mismatch");
  MatFp aug(a.rows, a.cols + 1, a.m);
  for (uint32_t i = 0; i < a.rows; ++i) {
    for (uint32_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i] % a.m;
  }
  std::vector<uint32_t> piv;
  eliminate(aug, piv, nullptr);
  std::vector<uint64_t> x(a.cols, 0);
  for (uint32_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == a.cols) return {};  // pivot in augmented column: inconsistent
    x[piv[r]] = aug.at(r, a.cols);
  }
  return x;
}

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_sub(const Poly& a, const Poly& b, uint64_t m) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = modp::sub(r[i], b[i], m);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  }
  return poly_trim(std::move(r));
}

Poly poly_rem(Poly a, const Poly& b, uint64_t m) {
  if (b.empty()) throw std::logic_error("poly division by zero");
  uint64_t il = modp::inv(b.back(), m);
  while (a.size() >= b.size()) {
    uint64_t f = a.back() * il % m;
    if (f != 0) {
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[off + j] = modp::sub(a[off + j], f * b[j] % m, m);
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.size() < b.size()) break;
  }
  return poly_trim(std::move(a));
}

Poly poly_gcd(Poly a, Poly b, uint64_t m) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    uint64_t il = modp::inv(a.back(), m);
    for (uint64_t& c : a) c = c * il % m;
  }
  return a;
}

Poly poly_deriv(const Poly& a, uint64_t m) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % m) % m);
  return poly_trim(std::move(r));
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t m) {
  Poly r{1};
  base = poly_rem(std::move(base), f, m);
  while (e) {
    if (e & 1) r = poly_rem(poly_mul(r, base, m), f, m);
    base = poly_rem(poly_mul(base, base, m), f, m);
    e >>= 1;
  }
  return r;
}

Poly charpoly(const MatFp& a) {
  if (a.rows != a.cols) throw std::logic_error("charpoly of non-square matrix");
  const uint32_t n = a.rows;
  const uint64_t m = a.m;
  if (m <= n) throw std::logic_error("modulus too small for interpolation");
  // evaluate det(A - x I) at x = 0..n, then Lagrange-interpolate
  std::vector<uint64_t> xs(n + 1), ys(n + 1);
  for (uint32_t t = 0; t <= n; ++t) {
    MatFp c = a;
    for (uint32_t i = 0; i < n; ++i) c.at(i, i) = modp::sub(c.at(i, i), t, m);
    xs[t] = t;
    ys[t] = det(std::move(c));
  }
  Poly acc;
  for (uint32_t i = 0; i <= n; ++i) {
    Poly term{1};
    uint64_t denom = 1;
    for (uint32_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      term = poly_mul(term, Poly{modp::sub(0, xs[j], m), 1}, m);
      denom = denom * modp::sub(xs[i], xs[j], m) % m;
    }
    uint64_t f = ys[i] * modp::inv(denom, m) % m;
    if (acc.size() < term.size()) acc.resize(term.size(), 0);
    for (std::size_t c = 0; c < term.size(); ++c)
      acc[c] = (acc[c] + term[c] * f) % m;
  }
  return poly_trim(std::move(acc));
}

// quotient of f by a known divisor g (remainder must vanish)
static Poly poly_div_exact(const Poly& f, const Poly& g, uint64_t m) {
  Poly rem = f;
  Poly quot(f.size() - g.size() + 1, 0);
  uint64_t il = modp::inv(g.back(), m);
  for (std::size_t i = quot.size(); i-- > 0;) {
    uint64_t c = rem[g.size() - 1 + i];
    uint64_t fq = c * il % m;
    quot[i] = fq;
    if (fq)
      for (std::size_t j = 0; j < g.size(); ++j)
        rem[i + j] = modp::sub(rem[i + j], fq * g[j] % m, m);
  }
  for (uint64_t v : rem)
    if (v != 0) throw std::logic_error("poly division not exact");
  return poly_trim(std::move(quot));
}

static void split_roots(const Poly& f, uint64_t m, std::mt19937_64& rng,
                        std::vector<uint64_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    // ax + b = 0 -> x = -b/a
    out.push_back(modp::sub(0, f[0], m) * modp::inv(f[1], m) % m);
    return;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    uint64_t shift = rng() % m;
    // (x + shift)^((m-1)/2) - 1 shares a nontrivial factor with f whenever
    // the shifted roots split between quadratic residues and nonresidues
    Poly h = poly_powmod(Poly{shift, 1}, (m - 1) / 2, f, m);
    if (h.empty())
      h = Poly{m - 1};
    else
      h[0] = modp::sub(h[0], 1, m);
    Poly g = poly_gcd(f, poly_trim(std::move(h)), m);
    if (g.size() > 1 && g.size() < f.size()) {
      split_roots(g, m, rng, out);
      split_roots(poly_div_exact(f, g, m), m, rng, out);
      return;
    }
  }
  throw std::runtime_error("root splitting stalled (internal error)");
}

std::vector<uint64_t> distinct_roots(Poly f, uint64_t m) {
  f = poly_trim(std::move(f));
  if (f.size() <= 1) return {};
  Poly g = poly_gcd(f, poly_deriv(f, m), m);
  if (g.size() > 1) f = poly_div_exact(f, g, m);  // squarefree part
  // keep only the part splitting into linear factors: gcd(f, x^m - x)
  Poly xm = poly_powmod(Poly{0, 1}, m, f, m);
  xm = poly_sub(xm, Poly{0, 1}, m);
  f = poly_gcd(f, xm, m);
  std::vector<uint64_t> out;
  std::mt19937_64 rng(0x5eedc0de);
  split_roots(f, m, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t find_prime_one_mod(uint64_t e, uint64_t min_exclusive, uint64_t cap) {
  for (uint64_t l = e + 1;; l += e) {
    if (l <= min_exclusive) continue;
    if (l > cap)
      throw std::runtime_error("no usable prime below the modulus cap");
    if (is_prime(l)) return l;
  }
}

uint64_t smallest_primitive_root(uint64_t l) {
  auto fac = factor(l - 1);
  for (uint64_t g = 2; g < l; ++g) {
    bool ok = true;
    for (auto [p, k] : fac) {
      (void)k;
      if (modp::pow(g, (l - 1) / p, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::runtime_error("no primitive root found (modulus not prime?)");
}

}  // namespace cd1lab
