#include <stdexcept>

#include "cd1lab/numutil.hpp"
#include "cd1lab/zoo.hpp"

namespace cd1lab {

Group cyclic_group(uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic order must be positive");
  std::vector<uint32_t> img(n);
  for (uint64_t i = 0; i < n; ++i) img[i] = static_cast<uint32_t>((i + 1) % n);
  return Group::from_generators(static_cast<uint32_t>(n), {Perm(std::move(img))});
}

Group dihedral_group(uint64_t n) {
  if (n < 3) throw std::invalid_argument("dihedral parameter must be at least 3");
  std::vector<uint32_t> rot(n), refl(n);
  for (uint64_t i = 0; i < n; ++i) {
    rot[i] = static_cast<uint32_t>((i + 1) % n);
    refl[i] = static_cast<uint32_t>((n - i) % n);
  }
  return Group::from_generators(static_cast<uint32_t>(n),
                                {Perm(std::move(rot)), Perm(std::move(refl))});
}

Group dihedral8() { return dihedral_group(4); }

Group klein_four() {
  return Group::from_generators(
      4, {parse_perm("(0 1)", 4), parse_perm("(2 3)", 4)});
}

Group symmetric4() {
  return Group::from_generators(
      4, {parse_perm("(0 1 2 3)", 4), parse_perm("(0 1)", 4)});
}

namespace {

// quaternion units encoded 2*axis + (1 if negative), axes 1,i,j,k
std::pair<uint32_t, bool> quat_axis_mul(uint32_t a, uint32_t b) {
  static const int axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const bool negf[4][4] = {
      {false, false, false, false},
      {false, true, false, true},
      {false, true, true, false},
      {false, false, true, true}};
  return {static_cast<uint32_t>(axis[a][b]), negf[a][b]};
}

uint32_t quat_mul(uint32_t x, uint32_t y) {
  auto [axis, neg] = quat_axis_mul(x >> 1, y >> 1);
  bool sign = ((x & 1) ^ (y & 1)) ^ neg;
  return axis * 2 + (sign ? 1 : 0);
}

}  // namespace

Group quaternion8() {
  std::vector<uint32_t> im_i(8), im_j(8);
  for (uint32_t y = 0; y < 8; ++y) {
    im_i[y] = quat_mul(2, y);  // left multiplication by i
    im_j[y] = quat_mul(4, y);  // left multiplication by j
  }
  return Group::from_generators(8, {Perm(std::move(im_i)), Perm(std::move(im_j))});
}

Group affine_line(const FiniteField& f) {
  const uint64_t q = f.size();
  if (q <= 2)
    throw std::invalid_argument(
        "group too small: the affine line needs at least 3 field elements");
  std::vector<uint32_t> mimg(q), aimg(q);
  for (uint64_t x = 0; x < q; ++x) {
    mimg[x] = static_cast<uint32_t>(f.mul(f.generator(), x));
    aimg[x] = static_cast<uint32_t>(f.add(x, 1));
  }
  return Group::from_generators(static_cast<uint32_t>(q),
                                {Perm(std::move(mimg)), Perm(std::move(aimg))});
}

Group affine_line_q(uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q must be a prime power");
  return affine_line(FiniteField(pp->first, pp->second));
}

// central product: glue the unique central involutions together
static Group central_product_with_d8(const Group& g) {
  Group d8 = dihedral8();
  Group prod = direct_product(g, d8);
  uint32_t zg = center(g).members[1];
  uint32_t zd = center(d8).members[1];
  std::vector<uint32_t> img;
  img.reserve(prod.degree());
  const Perm& pg = g.elements()[zg];
  const Perm& pd = d8.elements()[zd];
  for (uint32_t i = 0; i < g.degree(); ++i) img.push_back(pg(i));
  for (uint32_t i = 0; i < d8.degree(); ++i) img.push_back(g.degree() + pd(i));
  uint32_t zz = prod.index_of(Perm(std::move(img)));
  return quotient_group(prod, cyclic_subgroup(prod, zz)).group;
}

Group extraspecial_2group(uint32_t m, char kind) {
  if (kind != '+' && kind != '-')
    throw std::invalid_argument("kind must be '+' or '-'");
  if (m < 1 || m > 5)
    throw std::invalid_argument("block count must be between 1 and 5");
  Group g = kind == '-' ? quaternion8() : dihedral8();
  for (uint32_t i = 2; i <= m; ++i) g = central_product_with_d8(g);
  return g;
}

namespace {

std::vector<uint64_t> vec_decode(uint64_t v, uint64_t p, uint32_t n) {
  std::vector<uint64_t> d(n);
  for (uint32_t i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

uint64_t vec_encode(const std::vector<uint64_t>& d, uint64_t p) {
  uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Group affine_semidirect(uint64_t p, uint32_t n, const std::vector<Mat>& mats) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1 || n > 4) throw std::invalid_argument("dimension must be 1..4");
  const uint64_t q = ipow(p, n);
  for (const Mat& m : mats) {
    if (m.dim != n || m.p != p)
      throw std::invalid_argument("matrix shape mismatch");
    if (mat_det(m) == 0) throw std::invalid_argument("matrix not invertible");
  }
  if (!mats.empty()) {
    auto closure = matrix_closure(mats, 100000);
    for (const Mat& m : closure)
      if (!(m == closure[0]) && !mat_fixes_only_zero(m))
        throw std::invalid_argument("complement not fixed-point-free");
  }

  std::vector<Perm> gens;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<uint32_t> img(q);
    for (uint64_t x = 0; x < q; ++x) {
      auto d = vec_decode(x, p, n);
      d[i] = (d[i] + 1) % p;
      img[x] = static_cast<uint32_t>(vec_encode(d, p));
    }
    gens.emplace_back(std::move(img));
  }
  for (const Mat& m : mats) {
    std::vector<uint32_t> img(q);
    for (uint64_t x = 0; x < q; ++x) {
      auto d = vec_decode(x, p, n);
      std::vector<uint64_t> y(n, 0);
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) y[i] = (y[i] + m.at(i, j) * d[j]) % p;
      img[x] = static_cast<uint32_t>(vec_encode(y, p));
    }
    gens.emplace_back(std::move(img));
  }
  return Group::from_generators(static_cast<uint32_t>(q), std::move(gens));
}

std::vector<Group> order27_groups() {
  std::vector<Group> out;
  out.push_back(cyclic_group(27));
  out.push_back(direct_product(cyclic_group(9), cyclic_group(3)));
  out.push_back(direct_product(direct_product(cyclic_group(3), cyclic_group(3)),
                               cyclic_group(3)));
  {
    // exponent-3 group: triples with (a,b,c)(x,y,z) = (a+x, b+y, c+z+a*y)
    auto enc = [](uint64_t a, uint64_t b, uint64_t c) {
      return static_cast<uint32_t>(a + 3 * b + 9 * c);
    };
    std::vector<uint32_t> g1(27), g2(27);
    for (uint64_t x = 0; x < 3; ++x)
      for (uint64_t y = 0; y < 3; ++y)
        for (uint64_t z = 0; z < 3; ++z) {
          g1[enc(x, y, z)] = enc((x + 1) % 3, y, (z + y) % 3);
          g2[enc(x, y, z)] = enc(x, (y + 1) % 3, z);
        }
    out.push_back(Group::from_generators(27, {Perm(std::move(g1)),
                                              Perm(std::move(g2))}));
  }
  {
    // exponent-9 group: a^9 = b^3 = 1 with b a b^-1 = a^4
    auto enc = [](uint64_t i, uint64_t j) { return static_cast<uint32_t>(i + 9 * j); };
    std::vector<uint32_t> ga(27), gb(27);
    for (uint64_t i = 0; i < 9; ++i)
      for (uint64_t j = 0; j < 3; ++j) {
        ga[enc(i, j)] = enc((i + 1) % 9, j);
        gb[enc(i, j)] = enc(4 * i % 9, (j + 1) % 3);
      }
    out.push_back(Group::from_generators(27, {Perm(std::move(ga)),
                                              Perm(std::move(gb))}));
  }
  return out;
}

}  // namespace cd1lab
