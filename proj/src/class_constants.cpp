#include "cd1lab/chartable.hpp"

namespace cd1lab {

std::vector<MatFp> class_matrices(const Group& g, uint64_t ell) {
  const uint32_t k = g.num_classes();
  std::vector<MatFp> ms(k, MatFp(k, k, ell));
  // For fixed l and every x in G: x * (x^-1 rep_l) = rep_l contributes one
  // (x, y) pair to the count at (class of x, class of y, l).
  for (uint32_t l = 0; l < k; ++l) {
    uint32_t zl = g.classes()[l].rep;
    std::vector<uint64_t> counts(std::size_t(k) * k, 0);
    for (uint32_t x = 0; x < g.order(); ++x) {
      uint32_t i = g.class_of(x);
      uint32_t j = g.class_of(g.mul(g.inv(x), zl));
      ++counts[std::size_t(i) * k + j];
    }
    for (uint32_t i = 0; i < k; ++i)
      for (uint32_t j = 0; j < k; ++j)
        ms[i].at(j, l) = counts[std::size_t(i) * k + j] % ell;
  }
  return ms;
}

}  // namespace cd1lab
