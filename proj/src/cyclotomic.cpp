#include "cd1lab/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "cd1lab/numutil.hpp"

namespace cd1lab {

// exact division of integer polynomials, used only where the quotient is
// known to be integral (x^e - 1 by products of cyclotomic factors)
static std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                                const std::vector<long long>& den) {
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long long lead = num[i + den.size() - 1];
    if (lead % den.back() != 0)
      throw std::logic_error("cyclotomic factor division not exact");
    long long f = lead / den.back();
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (long long v : num)
    if (v != 0) throw std::logic_error("cyclotomic factor division left remainder");
  return q;
}

std::vector<long long> cyclotomic_polynomial(uint32_t e) {
  static std::map<uint32_t, std::vector<long long>> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::vector<long long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;  // x^e - 1
  std::vector<long long> result = std::move(num);
  for (uint32_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    result = poly_divide_exact(std::move(result), cyclotomic_polynomial(d));
  }
  cache[e] = result;
  return result;
}

namespace {

struct PowerTable {
  uint32_t e = 1;
  uint32_t phi = 1;
  // pow[k] = coefficients of z^k on the power basis, for k in [0, e)
  std::vector<std::vector<long long>> pow;
};

const PowerTable& table_for(uint32_t e) {
  static std::map<uint32_t, PowerTable> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  if (e == 0) throw std::invalid_argument("cyclotomic level must be positive");
  PowerTable t;
  t.e = e;
  auto poly = cyclotomic_polynomial(e);
  t.phi = static_cast<uint32_t>(poly.size() - 1);
  t.pow.resize(e);
  for (uint32_t k = 0; k < t.phi && k < e; ++k) {
    t.pow[k].assign(t.phi, 0);
    t.pow[k][k] = 1;
  }
  for (uint32_t k = t.phi; k < e; ++k) {
    // z^k = z * z^(k-1); a spill past degree phi-1 folds back through
    // z^phi = -(poly[0] + ... + poly[phi-1] z^(phi-1))
    const auto& prev = t.pow[k - 1];
    std::vector<long long> cur(t.phi, 0);
    for (uint32_t i = 0; i + 1 < t.phi; ++i) cur[i + 1] = prev[i];
    long long spill = prev[t.phi - 1];
    if (spill != 0)
      for (uint32_t i = 0; i < t.phi; ++i) cur[i] -= spill * poly[i];
    t.pow[k] = std::move(cur);
  }
  return cache.emplace(e, std::move(t)).first->second;
}

std::vector<long long> reduce_exponents(uint32_t e,
                                        const std::vector<long long>& by_exp) {
  const PowerTable& t = table_for(e);
  std::vector<long long> out(t.phi, 0);
  for (uint32_t k = 0; k < e; ++k) {
    long long v = by_exp[k];
    if (v == 0) continue;
    const auto& row = t.pow[k];
    for (uint32_t i = 0; i < t.phi; ++i) out[i] += v * row[i];
  }
  return out;
}

}  // namespace

Cyclo Cyclo::zero(uint32_t e) {
  return Cyclo(e, std::vector<long long>(table_for(e).phi, 0));
}

Cyclo Cyclo::integer(uint32_t e, long long v) {
  std::vector<long long> c(table_for(e).phi, 0);
  c[0] = v;
  return Cyclo(e, std::move(c));
}

Cyclo Cyclo::root(uint32_t e, uint64_t k) {
  const PowerTable& t = table_for(e);
  std::vector<long long> by_exp(e, 0);
  by_exp[k % e] = 1;
  (void)t;
  return Cyclo(e, reduce_exponents(e, by_exp));
}

bool Cyclo::is_zero() const {
  for (long long v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

long long Cyclo::rational_value() const {
  if (!is_rational()) throw std::logic_error("value is not rational");
  return c_[0];
}

Cyclo Cyclo::conjugate() const {
  const PowerTable& t = table_for(level_);
  std::vector<long long> by_exp(level_, 0);
  for (uint32_t i = 0; i < t.phi; ++i)
    by_exp[i == 0 ? 0 : level_ - i] += c_[i];
  return Cyclo(level_, reduce_exponents(level_, by_exp));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (long long& v : r.c_) v = -v;
  return r;
}

static void check_levels(const Cyclo& a, const Cyclo& b) {
  if (a.level() != b.level())
    throw std::logic_error("cyclotomic level mismatch");
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_levels(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_levels(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  check_levels(a, b);
  uint32_t e = a.level_;
  std::vector<long long> by_exp(e, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      by_exp[(i + j) % e] += a.c_[i] * b.c_[j];
  }
  return Cyclo(e, reduce_exponents(e, by_exp));
}

Cyclo operator*(Cyclo a, long long s) {
  for (long long& v : a.c_) v *= s;
  return a;
}

std::optional<Cyclo> divide_exact(const Cyclo& v, long long d) {
  if (d == 0) return std::nullopt;
  Cyclo r = v;
  for (long long& c : r.c_) {
    if (c % d != 0) return std::nullopt;
    c /= d;
  }
  return r;
}

int compare_coeffs(const Cyclo& a, const Cyclo& b) {
  check_levels(a, b);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

std::string Cyclo::to_string() const {
  if (is_rational()) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    long long v = c_[i];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    unsigned long long mag = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace cd1lab
