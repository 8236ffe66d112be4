#include <stdexcept>

#include "cd1lab/numutil.hpp"
#include "cd1lab/zoo.hpp"

namespace cd1lab {

namespace {

std::vector<uint64_t> decode(uint64_t v, uint64_t p, uint32_t n) {
  std::vector<uint64_t> d(n);
  for (uint32_t i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

uint64_t encode(const std::vector<uint64_t>& d, uint64_t p) {
  uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// polynomial has a root in F_p
bool has_root(const std::vector<uint64_t>& poly, uint64_t p) {
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

std::vector<uint64_t> poly_mod(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& m, uint64_t p) {
  while (a.size() >= m.size()) {
    uint64_t lead = a.back();  // m is monic
    std::size_t off = a.size() - m.size();
    if (lead)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[off + i] = (a[off + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p) {
  uint32_t deg = static_cast<uint32_t>(poly.size() - 1);
  if (deg <= 1) return true;
  if (has_root(poly, p)) return false;
  if (deg <= 3) return true;
  // degree 4: also exclude products of two irreducible quadratics
  for (uint64_t c1 = 0; c1 < p; ++c1)
    for (uint64_t c0 = 0; c0 < p; ++c0) {
      std::vector<uint64_t> quad{c0, c1, 1};
      if (has_root(quad, p)) continue;
      // divide poly by quad; remainder zero means reducible
      std::vector<uint64_t> rem = poly_mod(poly, quad, p);
      bool zero = true;
      for (uint64_t v : rem)
        if (v) zero = false;
      if (zero) return false;
    }
  return true;
}

}  // namespace

FiniteField::FiniteField(uint64_t p, uint32_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n < 1 || n > 4)
    throw std::invalid_argument("field degree must be between 1 and 4");
  q_ = ipow(p, n);
  // smallest monic irreducible: iterate the encoded low-coefficient vector
  for (uint64_t v = 0;; ++v) {
    if (v >= q_) throw std::logic_error("no irreducible polynomial found");
    mod_ = decode(v, p, n);
    mod_.push_back(1);
    if (is_irreducible(mod_, p)) break;
  }
  // smallest multiplicative generator, verified by order
  auto fac = factor(q_ - 1);
  for (uint64_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto [r, e] : fac) {
      (void)e;
      if (pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0 && q_ > 2) throw std::logic_error("no field generator found");
  if (q_ == 2) gen_ = 1;
}

uint64_t FiniteField::add(uint64_t a, uint64_t b) const {
  auto da = decode(a, p_, n_), db = decode(b, p_, n_);
  for (uint32_t i = 0; i < n_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da, p_);
}

uint64_t FiniteField::neg(uint64_t a) const {
  auto d = decode(a, p_, n_);
  for (uint32_t i = 0; i < n_; ++i) d[i] = (p_ - d[i]) % p_;
  return encode(d, p_);
}

uint64_t FiniteField::mul(uint64_t a, uint64_t b) const {
  auto da = decode(a, p_, n_), db = decode(b, p_, n_);
  std::vector<uint64_t> prod(2 * n_ - 1, 0);
  for (uint32_t i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < n_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  prod = poly_mod(std::move(prod), mod_, p_);
  prod.resize(n_, 0);
  return encode(prod, p_);
}

uint64_t FiniteField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t FiniteField::inv(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, q_ - 2);
}

}  // namespace cd1lab
