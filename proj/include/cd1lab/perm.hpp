#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cd1lab {

// Permutation of {0..degree-1}. Composition is function composition:
// (a*b)(x) = a(b(x)).
class Perm {
 public:
  explicit Perm(uint32_t degree);             // identity
  explicit Perm(std::vector<uint32_t> images);  // validates bijectivity

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t operator()(uint32_t p) const { return img_[p]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths
  std::vector<std::vector<uint32_t>> cycles() const;  // nontrivial only
  std::string cycle_string() const;                   // "()" for identity

  bool operator==(const Perm&) const = default;

 private:
  std::vector<uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Parses cycle notation, e.g. "(0 1 2)(3 4)". Points are 0-based decimals,
// separated by spaces or commas. "()" is the identity. Throws
// std::invalid_argument on malformed input or out-of-range points.
Perm parse_perm(const std::string& text, uint32_t degree);

struct ConjugacyClass {
  uint32_t rep;                   // smallest element index in the class
  uint64_t size;
  uint64_t element_order;
  std::vector<uint32_t> members;  // sorted element indices
};

// Finite permutation group, fully enumerated. Element 0 is the identity;
// enumeration order is breadth-first from the identity with generators
// applied in their given order (deterministic). Construction computes
// inverses, element orders and the conjugacy class partition up front.
// Classes are sorted: identity class first, then by
// (size, element_order, smallest member index).
class Group {
 public:
  static Group from_generators(uint32_t degree, std::vector<Perm> gens,
                               uint64_t element_cap = default_element_cap());
  // 100000 unless overridden by the CD1LAB_ELEMENT_CAP environment variable
  static uint64_t default_element_cap();

  uint32_t degree() const { return degree_; }
  uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<uint32_t>& generator_indices() const { return gen_idx_; }

  std::optional<uint32_t> find(const Perm& p) const;
  uint32_t index_of(const Perm& p) const;  // throws if absent

  uint32_t mul(uint32_t a, uint32_t b) const;  // index of elements a*b
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t conj(uint32_t x, uint32_t g) const;  // index of g^-1 * x * g
  uint64_t element_order(uint32_t a) const { return orders_[a]; }
  uint64_t exponent() const { return exponent_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  uint32_t num_classes() const { return static_cast<uint32_t>(classes_.size()); }
  uint32_t class_of(uint32_t element) const { return class_of_[element]; }
  uint32_t inverse_class(uint32_t c) const;
  // class of rep^s (s may exceed the element order)
  uint32_t power_class(uint32_t c, uint64_t s) const;

 private:
  Group() = default;
  void compute_classes();

  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<uint32_t> gen_idx_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, uint32_t, PermHash> index_;
  std::vector<uint32_t> inv_;
  std::vector<uint64_t> orders_;
  uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<uint32_t> class_of_;
};

// Subgroup of a fixed parent group: sorted member indices plus a small
// generating set. All operations below take the parent explicitly.
struct Subgroup {
  std::vector<uint32_t> members;  // sorted, always contains 0
  std::vector<uint32_t> gens;     // generating subset (element indices)

  uint64_t order() const { return members.size(); }
  bool contains(uint32_t e) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup trivial_subgroup();
Subgroup whole_group(const Group& g);
Subgroup subgroup_closure(const Group& g, std::vector<uint32_t> gens);
// Wraps an already-closed member set with a small generating set.
Subgroup subgroup_from_members(const Group& g, std::vector<uint32_t> members);
Subgroup cyclic_subgroup(const Group& g, uint32_t e);
Subgroup centralizer(const Group& g, uint32_t e);
Subgroup centralizer_of_subgroup(const Group& g, const Subgroup& s);
Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup normal_closure(const Group& g, const std::vector<uint32_t>& seed);
Subgroup conjugate_subgroup(const Group& g, const Subgroup& s, uint32_t x);
bool is_normal(const Group& g, const Subgroup& s);
Subgroup normalizer(const Group& g, const Subgroup& s);
Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b);
bool is_abelian(const Group& g);
bool is_abelian_subgroup(const Group& g, const Subgroup& s);

// Sylow p-subgroup: grows a maximal-order p-element's cyclic group by
// p-power-order elements of its normalizer until the full p-part is reached.
// Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const Group& g, uint64_t p);

// O_p(G): intersection of the conjugates of one Sylow p-subgroup.
Subgroup p_core(const Group& g, uint64_t p);

// (p, n) with |S| = p^n, S abelian, every nonidentity element of order p.
std::optional<std::pair<uint64_t, uint32_t>> elementary_abelian_shape(
    const Group& g, const Subgroup& s);

// Every subgroup of s (brute-force closure lattice walk); |s| must be small.
std::vector<Subgroup> subgroups_within(const Group& g, const Subgroup& s,
                                       uint64_t max_subgroups = 100000);

// G/N as a permutation group on the right cosets of N (the regular action of
// the quotient). Throws std::invalid_argument("not normal") otherwise.
struct Quotient {
  Group group;
  std::vector<uint32_t> coset_of;  // parent element index -> quotient element index
};
Quotient quotient_group(const Group& g, const Subgroup& n);

Group direct_product(const Group& a, const Group& b);

}  // namespace cd1lab
