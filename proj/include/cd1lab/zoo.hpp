#pragma once
#include <cstdint>
#include <vector>

#include "cd1lab/matgroup.hpp"
#include "cd1lab/perm.hpp"

namespace cd1lab {

// GF(p^n) with elements encoded as 0..p^n-1 (base-p digit vectors, constant
// coefficient first). The modulus is the monic irreducible of degree n whose
// non-leading coefficient vector encodes to the smallest integer.
class FiniteField {
 public:
  FiniteField(uint64_t p, uint32_t n);

  uint64_t p() const { return p_; }
  uint32_t deg() const { return n_; }
  uint64_t size() const { return q_; }
  const std::vector<uint64_t>& modulus() const { return mod_; }
  uint64_t generator() const { return gen_; }  // verified multiplicative order q-1

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;

 private:
  uint64_t p_, q_;
  uint32_t n_;
  std::vector<uint64_t> mod_;  // ascending coefficients, size n+1, monic
  uint64_t gen_ = 0;
};

Group cyclic_group(uint64_t n);
Group dihedral_group(uint64_t n);  // order 2n, n >= 3
Group klein_four();
Group quaternion8();
Group dihedral8();
Group symmetric4();

// x -> gamma x and x -> x+1 on the q field elements: the full affine line,
// sharply 2-transitive of order q(q-1). q <= 2 is rejected ("group too
// small") since the column condition needs order above 2.
Group affine_line(const FiniteField& f);
Group affine_line_q(uint64_t q);

// Central products of dihedral/quaternion blocks: order 2^(2m+1), center of
// order 2, all faithful degrees equal to 2^m. kind '+' starts from the
// dihedral block, '-' from the quaternion block.
Group extraspecial_2group(uint32_t m, char kind);

// F_p^n semidirect the matrix group generated by mats, acting on p^n points.
// Every generator must be invertible and the generated complement must fix
// only the zero vector.
Group affine_semidirect(uint64_t p, uint32_t n, const std::vector<Mat>& mats);

// the five groups of order 27, each on 27 points
std::vector<Group> order27_groups();

}  // namespace cd1lab
