#pragma once

// Exact character tables via the Dixon-Schneider method, and the minimal
// faithful representation dimension solver on top of them.
//
// The modular phase runs over F_q with q = 1 (mod e), q > 2*sqrt(|G|),
// q coprime to |G|; eigenvalues lift to cyclotomic integers at conductor
// e = exponent(G).  Both orthogonality relations are checked exactly at
// construction time.

#include <cstdint>

#include "polyrep/cyclotomic.hpp"
#include "polyrep/group_ops.hpp"

namespace polyrep {

struct Character {
  std::vector<Cyclotomic> values;  // one per class, conductor = exponent
  long long degree = 0;
  std::vector<char> kernel_class;  // per class: chi(c) == chi(1)
};

struct CharacterTable {
  GroupPtr group;
  Fingerprint group_fingerprint;
  long long exponent = 1;
  long long dixon_prime = 0;
  std::vector<long long> class_sizes;
  std::vector<Character> irreducibles;  // sorted by (degree, value encoding)
};

// Throws: order cap (> 10^4), class cap, or no usable prime below 10^6.
CharacterTable character_table(const GroupPtr& g);

// Rebuilds the derived fields (kernels) and re-verifies the orthogonality
// relations; used when a table is loaded from cache.
void verify_character_table(CharacterTable& t);

struct RdimResult {
  long long value = 0;
  std::vector<std::vector<int>> witness;  // chosen candidates as character index sets
  bool optimality_exhaustive = false;     // exhaustively confirmed (small tables)
};

// Minimal total degree of a set of irreducibles whose kernels intersect
// trivially, certified through the minimal normal subgroups of G.
RdimResult rdim_split(const CharacterTable& t, const std::vector<EmbeddedGroup>& min_normals);

// Same minimization over Galois-orbit sums of irreducibles; a lower bound
// for the representation dimension over the rationals.
RdimResult rdim_rational_lower(const CharacterTable& t,
                               const std::vector<EmbeddedGroup>& min_normals);

// Exhaustive oracle over all subsets of irreducibles; deliberately
// independent of the minimal-normal-subgroup machinery (it tests kernel
// intersections directly against the class partition).
long long rdim_split_exhaustive(const CharacterTable& t);

// (1/|G|) sum chi(g^2); exactly 1, 0 or -1, anything else throws.
int frobenius_schur(const CharacterTable& t, int chi_index);

// Galois orbit partition of the irreducibles under Gal(Q(zeta_e)/Q).
std::vector<std::vector<int>> galois_orbits(const CharacterTable& t);

}  // namespace polyrep
