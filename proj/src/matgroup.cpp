#include "cd1lab/matgroup.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cd1lab/group_io.hpp"
#include "cd1lab/modlinalg.hpp"
#include "cd1lab/numutil.hpp"

namespace cd1lab {

Mat mat_identity(uint32_t dim, uint64_t p) {
  Mat m{dim, p, std::vector<uint64_t>(std::size_t(dim) * dim, 0)};
  for (uint32_t i = 0; i < dim; ++i) m.at(i, i) = 1 % p;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r{x.dim, x.p, std::vector<uint64_t>(x.a.size(), 0)};
  for (uint32_t i = 0; i < x.dim; ++i)
    for (uint32_t k = 0; k < x.dim; ++k) {
      uint64_t f = x.at(i, k);
      if (!f) continue;
      for (uint32_t j = 0; j < x.dim; ++j)
        r.at(i, j) = (r.at(i, j) + f * y.at(k, j)) % x.p;
    }
  return r;
}

static MatFp to_matfp(const Mat& x) {
  MatFp m(x.dim, x.dim, x.p);
  m.a = x.a;
  return m;
}

uint64_t mat_det(const Mat& x) { return det(to_matfp(x)); }

Mat mat_inv(const Mat& x) {
  if (mat_det(x) == 0) throw std::invalid_argument("matrix not invertible");
  // solve X A = I columnwise via A^T y = e_i
  MatFp at(x.dim, x.dim, x.p);
  for (uint32_t i = 0; i < x.dim; ++i)
    for (uint32_t j = 0; j < x.dim; ++j) at.at(i, j) = x.at(j, i);
  Mat r{x.dim, x.p, std::vector<uint64_t>(x.a.size(), 0)};
  for (uint32_t i = 0; i < x.dim; ++i) {
    std::vector<uint64_t> e(x.dim, 0);
    e[i] = 1;
    std::vector<uint64_t> row = solve(at, std::move(e));
    if (row.empty()) throw std::invalid_argument("matrix not invertible");
    for (uint32_t j = 0; j < x.dim; ++j) r.at(i, j) = row[j];
  }
  return r;
}

uint64_t mat_order(const Mat& x, uint64_t cap) {
  Mat id = mat_identity(x.dim, x.p);
  Mat cur = x;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (cur == id) return k;
    cur = mat_mul(cur, x);
  }
  throw std::runtime_error("matrix order exceeds cap");
}

bool mat_fixes_only_zero(const Mat& x) {
  Mat shifted = x;
  for (uint32_t i = 0; i < x.dim; ++i)
    shifted.at(i, i) = (shifted.at(i, i) + x.p - 1) % x.p;
  return mat_det(shifted) != 0;
}

std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("no generator matrices");
  std::vector<Mat> found{mat_identity(gens[0].dim, gens[0].p)};
  std::map<Mat, uint32_t> index{{found[0], 0}};
  for (std::size_t at = 0; at < found.size(); ++at) {
    for (const Mat& g : gens) {
      Mat w = mat_mul(found[at], g);
      if (index.emplace(w, static_cast<uint32_t>(found.size())).second) {
        found.push_back(std::move(w));
        if (found.size() > cap)
          throw std::runtime_error("matrix closure exceeded cap");
      }
    }
  }
  return found;
}

std::vector<Mat> matrix_derived(const std::vector<Mat>& gens, std::size_t cap) {
  std::vector<Mat> seed;
  for (const Mat& x : gens)
    for (const Mat& y : gens) {
      Mat c = mat_mul(mat_mul(mat_inv(x), mat_inv(y)), mat_mul(x, y));
      if (!(c == mat_identity(x.dim, x.p))) seed.push_back(c);
    }
  if (seed.empty()) return {mat_identity(gens[0].dim, gens[0].p)};
  // grow until the closure is stable under conjugation by the generators
  while (true) {
    std::vector<Mat> closure = matrix_closure(seed, cap);
    std::map<Mat, bool> have;
    for (const Mat& m : closure) have[m] = true;
    bool grew = false;
    for (const Mat& m : closure) {
      for (const Mat& g : gens) {
        Mat c = mat_mul(mat_mul(mat_inv(g), m), g);
        if (!have.count(c)) {
          seed.push_back(std::move(c));
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return closure;
  }
}

std::vector<Mat> parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file: " + path);
  std::string line;
  int lineno = 0;
  uint64_t p = 0;
  uint32_t dim = 0;
  std::vector<Mat> mats;
  std::vector<uint64_t> pending;
  auto flush = [&](int at_line) {
    if (pending.empty()) return;
    if (pending.size() != std::size_t(dim) * dim)
      throw parse_error(path + ":" + std::to_string(at_line) +
                        ": matrix block has wrong entry count");
    mats.push_back(Mat{dim, p, pending});
    pending.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    if (p == 0) {
      std::string kw1, kw2;
      uint64_t pv = 0, dv = 0;
      if (!(is >> kw1)) continue;  // blank before header
      if (!(is >> pv >> kw2 >> dv) || kw1 != "p" || kw2 != "dim" || pv < 2 ||
          dv < 1)
        throw parse_error(path + ":" + std::to_string(lineno) +
                          ": expected 'p <prime> dim <d>' header");
      p = pv;
      dim = static_cast<uint32_t>(dv);
      continue;
    }
    bool any = false;
    long long v;
    while (is >> v) {
      any = true;
      long long r = v % static_cast<long long>(p);
      if (r < 0) r += static_cast<long long>(p);
      pending.push_back(static_cast<uint64_t>(r));
    }
    if (!is.eof())
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": unexpected text in matrix block");
    if (!any) flush(lineno);  // blank line ends a matrix block
  }
  flush(lineno);
  if (p == 0) throw parse_error(path + ": missing header");
  if (mats.empty()) throw parse_error(path + ": no matrices");
  return mats;
}

void write_matrix_file(const std::string& path, const std::vector<Mat>& mats,
                       const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write matrix file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "p " << mats[0].p << " dim " << mats[0].dim << "\n";
  for (const Mat& m : mats) {
    out << "\n";
    for (uint32_t i = 0; i < m.dim; ++i) {
      for (uint32_t j = 0; j < m.dim; ++j)
        out << m.at(i, j) << (j + 1 == m.dim ? "\n" : " ");
    }
  }
  if (!out) throw parse_error("write failed: " + path);
}

// enumerate 2x2 matrices over F_p in lexicographic entry order
static bool next_mat2(Mat& m) {
  for (std::size_t i = m.a.size(); i-- > 0;) {
    if (++m.a[i] < m.p) return true;
    m.a[i] = 0;
  }
  return false;
}

std::pair<Mat, Mat> find_icosahedral_pair(uint64_t p) {
  Mat a{2, p, {0, 0, 0, 0}};
  do {
    if (mat_det(a) != 1) continue;
    if ((a.at(0, 0) + a.at(1, 1)) % p != 0) continue;  // trace 0 -> order 4
    if (a == mat_identity(2, p)) continue;
    Mat b{2, p, {0, 0, 0, 0}};
    do {
      if (mat_det(b) != 1) continue;
      Mat b2 = mat_mul(b, b);
      Mat b4 = mat_mul(b2, b2);
      if (!(mat_mul(b4, b) == mat_identity(2, p))) continue;  // order | 5
      if (b == mat_identity(2, p)) continue;
      std::vector<Mat> closure;
      try {
        closure = matrix_closure({a, b}, 200);
      } catch (const std::runtime_error&) {
        continue;
      }
      if (closure.size() != 120) continue;
      uint64_t inv_count = 0;
      bool fpf = true;
      for (const Mat& m : closure) {
        if (m == closure[0]) continue;
        if (mat_mul(m, m) == closure[0]) ++inv_count;
        if (!mat_fixes_only_zero(m)) fpf = false;
      }
      if (inv_count == 1 && fpf) return {a, b};
    } while (next_mat2(b));
  } while (next_mat2(a));
  throw std::runtime_error("no icosahedral pair found");
}

std::pair<Mat, Mat> find_quaternion_pair(uint64_t p) {
  Mat a{2, p, {0, 0, 0, 0}};
  do {
    if (mat_det(a) != 1) continue;
    if ((a.at(0, 0) + a.at(1, 1)) % p != 0) continue;
    if (a == mat_identity(2, p)) continue;
    Mat b{2, p, {0, 0, 0, 0}};
    do {
      if (mat_det(b) != 1) continue;
      if ((b.at(0, 0) + b.at(1, 1)) % p != 0) continue;
      if (b == a || b == mat_identity(2, p)) continue;
      // quaternion shape: b a b^-1 = a^-1, a^2 = b^2, a != +-b
      Mat a2 = mat_mul(a, a);
      if (!(mat_mul(b, b) == a2)) continue;
      if (mat_mul(b, a) == mat_mul(a, b)) continue;
      std::vector<Mat> closure;
      try {
        closure = matrix_closure({a, b}, 32);
      } catch (const std::runtime_error&) {
        continue;
      }
      if (closure.size() != 8) continue;
      bool fpf = true;
      for (const Mat& m : closure)
        if (!(m == closure[0]) && !mat_fixes_only_zero(m)) fpf = false;
      if (fpf) return {a, b};
    } while (next_mat2(b));
  } while (next_mat2(a));
  throw std::runtime_error("no quaternion pair found");
}

uint64_t scalar_of_order(uint64_t p, uint64_t k) {
  for (uint64_t s = 2; s < p; ++s) {
    if (modp::pow(s, k, p) != 1) continue;
    bool exact = true;
    for (auto [q, e] : factor(k)) {
      (void)e;
      if (modp::pow(s, k / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return s;
  }
  throw std::runtime_error("no scalar of the requested order");
}

ComplementReport analyze_complement(const std::vector<Mat>& gens,
                                    std::size_t cap) {
  ComplementReport r;
  std::vector<Mat> closure = matrix_closure(gens, cap);
  r.closure_order = closure.size();
  const Mat id = closure[0];
  r.fixed_point_free = true;
  for (const Mat& m : closure) {
    if (m == id) continue;
    if (mat_mul(m, m) == id) ++r.involutions;
    if (!mat_fixes_only_zero(m)) r.fixed_point_free = false;
  }
  r.derived_order = matrix_derived(gens, cap).size();
  return r;
}

}  // namespace cd1lab
