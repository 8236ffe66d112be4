#pragma once
#include <cstdint>
#include <vector>

#include "cd1lab/perm.hpp"

namespace cd1lab {

// All automorphisms of g, each as a full table over element indices.
// Backtracks over generator images; meant for small groups (order <= ~100).
std::vector<std::vector<uint32_t>> automorphisms(const Group& g);

bool isomorphic(const Group& a, const Group& b);

// Keeps one group per isomorphism type. Cheap invariants split the list
// into buckets first; exact isomorphism tests settle collisions.
std::vector<Group> dedupe_groups(const std::vector<Group>& groups);

// Every group that contains `a` as an index-2 normal subgroup, one copy per
// (automorphism, coset-square) datum; callers dedupe. Each result acts on
// 2|a| points by left multiplication.
std::vector<Group> extensions_by_c2(const Group& a);

// All groups of order 2^k up to isomorphism (k <= 5). Every maximal
// subgroup of a 2-group is normal of index 2, so recursing on
// extensions_by_c2 from the order-2 group is exhaustive.
std::vector<Group> two_group_census(uint32_t k);

// All groups of order 54 up to isomorphism. The Sylow 3-subgroup is normal
// (its count is = 1 mod 3 and divides 2), so every such group extends one
// of the five order-27 groups by C2.
std::vector<Group> order54_census();

// Split extensions of p by a nonidentity involutory automorphism that
// inverts every central element, one per isomorphism type.
std::vector<Group> center_inverted_doubles(const Group& p);

}  // namespace cd1lab
