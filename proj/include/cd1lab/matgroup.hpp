#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace cd1lab {

// Small dense matrix over F_p, row-major.
struct Mat {
  uint32_t dim = 0;
  uint64_t p = 0;
  std::vector<uint64_t> a;  // reduced entries

  uint64_t at(uint32_t i, uint32_t j) const { return a[std::size_t(i) * dim + j]; }
  uint64_t& at(uint32_t i, uint32_t j) { return a[std::size_t(i) * dim + j]; }
  bool operator==(const Mat&) const = default;
  bool operator<(const Mat& o) const { return a < o.a; }
};

Mat mat_identity(uint32_t dim, uint64_t p);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_inv(const Mat& x);  // throws std::invalid_argument if singular
uint64_t mat_det(const Mat& x);
uint64_t mat_order(const Mat& x, uint64_t cap);  // throws past cap
// true when 1 is not an eigenvalue, i.e. no nonzero fixed vector
bool mat_fixes_only_zero(const Mat& x);

// BFS closure under multiplication; throws std::runtime_error past cap.
std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, std::size_t cap);
// subgroup generated by commutators of the closure's generators, saturated
// under conjugation (the derived subgroup of the closure)
std::vector<Mat> matrix_derived(const std::vector<Mat>& gens, std::size_t cap);

// Fixture format: "p <p> dim <d>" header, then each matrix as d lines of d
// integers, matrices separated by blank lines; '#' comments.
std::vector<Mat> parse_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const std::vector<Mat>& mats,
                       const std::string& comment = "");

// Lexicographically first pair (A, B) in GL(2,p) with det A = det B = 1,
// A of order 4 with trace 0, B of order 5, generating a closure of order
// exactly 120 with a unique involution acting fixed-point-freely.
std::pair<Mat, Mat> find_icosahedral_pair(uint64_t p);
// Lexicographically first pair of anticommuting order-4 matrices in SL(2,3)
// generating a closure of order 8 (quaternion shape).
std::pair<Mat, Mat> find_quaternion_pair(uint64_t p);
// smallest scalar of multiplicative order k mod p (throws if none)
uint64_t scalar_of_order(uint64_t p, uint64_t k);

// Facts checked for a fixed-point-free matrix complement that is too large
// to expand as a permutation group together with its kernel.
struct ComplementReport {
  uint64_t closure_order = 0;
  uint64_t involutions = 0;
  bool fixed_point_free = false;
  uint64_t derived_order = 0;
};
ComplementReport analyze_complement(const std::vector<Mat>& gens,
                                    std::size_t cap);

}  // namespace cd1lab
