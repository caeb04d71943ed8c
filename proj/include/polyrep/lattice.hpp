#pragma once

// Root/weight lattices with their Weyl groups as integer matrix groups,
// orbit enumeration on L/dL, the Nakayama generation test, and the
// symmetric rank search.

#include <string>
#include <vector>

namespace polyrep {

struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major

  static IntMatrix identity(int n);
  long long at(int r, int c) const { return a[(size_t)r * n + c]; }
  long long& at(int r, int c) { return a[(size_t)r * n + c]; }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
  std::vector<long long> apply(const std::vector<long long>& v) const;
  std::vector<int> apply_mod(const std::vector<int>& v, int d) const;
  long long determinant() const;
  std::string encoding() const;
};

struct LatticeAction {
  std::string name;  // A1, G2, A3, F4, D5, E6, B<n>
  int rank = 0;
  std::vector<IntMatrix> weyl_generators;
  long long weyl_order = 1;        // verified by closure (rank <= 6) or 2^n n! for B
  int default_modulus = 4;
  std::vector<long long> omega_seed;  // a (short) root / spinor weight in basis coords
  std::string omega_description;      // "roots", "short roots", "spinors"
};

// Supported names: A1, G2, A3, F4, D5, E6 (root lattices) and B (weight
// lattice, rank required).  Verifies the Weyl group order by closure for
// the rank <= 6 families.  Unknown name throws.
LatticeAction build_lattice(const std::string& name, int rank = 0);

// Counts the closure of the generators (hashed BFS, no Cayley table).
long long matrix_group_order(const std::vector<IntMatrix>& gens, size_t cap = 1000000);

struct OrbitDecomposition {
  int modulus = 0;
  int rank = 0;
  // orbits sorted by (size, lexicographic representative)
  std::vector<std::vector<std::vector<int>>> orbit_members;
  std::vector<std::vector<int>> orbit_reps;  // lexicographically smallest member
  std::vector<long long> orbit_sizes;
};

// Complete deterministic orbit decomposition of (Z/d)^rank under the Weyl
// generators.  Guard: d^rank <= 10^7.
OrbitDecomposition orbits_mod(const LatticeAction& lattice, int d);

// Nakayama-based test: do the vectors generate (Z/d)^n?  d in {2,3,4,6}.
bool generates_mod(const std::vector<std::vector<int>>& vectors, int n, int d);

// Brute-force additive closure oracle for generates_mod (test harness).
bool generates_mod_bruteforce(const std::vector<std::vector<int>>& vectors, int n, int d);

struct SymrankResult {
  long long value = 0;
  std::vector<int> witness_orbits;                 // indices into the decomposition
  std::vector<std::vector<int>> witness_reps;      // their representatives
  bool search_exhausted = false;                   // branch and bound ran to completion
  bool smaller_orbits_do_not_generate = false;     // union of all orbits of size < value fails
  OrbitDecomposition orbits;
};

SymrankResult symrank(const LatticeAction& lattice, int d);

// W-orbit of the omega seed over the integers (exact), then reduced mod d.
std::vector<std::vector<long long>> integer_orbit(const LatticeAction& lattice,
                                                  const std::vector<long long>& seed,
                                                  size_t cap = 1000000);

}  // namespace polyrep
