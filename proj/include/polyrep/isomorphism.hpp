#pragma once

// Isomorphism testing for small groups: fingerprint screen first, then
// backtracking over images of a greedily-found generating set.

#include <string>
#include <vector>

#include "polyrep/group.hpp"

namespace polyrep {

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> witness;  // G1 id -> G2 id, verified bijective homomorphism
  std::string reason;        // distinguishing invariant, or "backtrack exhausted"
};

// Throws std::invalid_argument when either order exceeds 10^4.
IsoResult is_isomorphic(const GroupPtr& g1, const GroupPtr& g2);

// A small generating set of g, greedy by id with a pruning pass.
std::vector<int> small_generating_set(const Group& g);

}  // namespace polyrep
