#pragma once

// Structural queries on materialized groups: subgroups, minimal normal
// subgroups, quotients, (semi)direct products, fingerprints.

#include <utility>

#include "polyrep/group.hpp"

namespace polyrep {

struct EmbeddedGroup {
  GroupPtr group;               // the subgroup with its own ids
  std::vector<int> parent_ids;  // subgroup id -> parent id
  std::vector<int> member_set;  // the same ids, sorted
};

// Sorted ids of the subgroup generated inside g.
std::vector<int> subgroup_element_ids(const Group& g, const std::vector<int>& gen_ids);

EmbeddedGroup make_subgroup(const GroupPtr& parent, std::vector<int> gen_ids,
                            const std::string& label = "subgroup");

bool is_normal(const Group& g, const std::vector<int>& members_sorted);

// Normal closures of single conjugacy classes, filtered down to the
// inclusion-minimal ones.
std::vector<EmbeddedGroup> minimal_normal_subgroups(const GroupPtr& g);

struct QuotientGroup {
  GroupPtr group;
  std::vector<int> projection;           // parent id -> quotient id
  std::vector<std::vector<int>> fibers;  // quotient id -> sorted parent ids
};

// Throws std::invalid_argument("not normal") when N is not normal in g.
QuotientGroup quotient_group(const GroupPtr& g, const std::vector<int>& normal_members);

enum class ProductKind { direct, semidirect };

struct ProductGroup {
  GroupPtr group;
  std::vector<std::pair<int, int>> pair_of;  // group id -> (N id, H id)
};

// action[h] is a permutation of N's ids; it must consist of automorphisms
// and be a homomorphism from H, both of which are checked.
ProductGroup product_group(ProductKind kind, const GroupPtr& n, const GroupPtr& h,
                           std::vector<std::vector<int>> action = {},
                           const std::string& label = "product");

struct Fingerprint {
  long long order = 0;
  std::vector<std::pair<int, long long>> spectrum;  // (element order, count)
  long long center_order = 0;
  long long derived_order = 0;
  std::vector<long long> abelian_invariants;  // d1 | d2 | ... ascending

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
  uint64_t hash64() const;
};

Fingerprint fingerprint(const Group& g);
// Names the first component where the two fingerprints differ.
std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b);

std::vector<int> center_ids(const Group& g);
std::vector<int> derived_subgroup_ids(const Group& g);

}  // namespace polyrep
