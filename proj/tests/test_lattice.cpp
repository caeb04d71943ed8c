#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "polyrep/exact_matrix.hpp"
#include "polyrep/lattice.hpp"

using namespace polyrep;

TEST_CASE("lattice construction verifies Weyl group orders") {
  CHECK(build_lattice("A1").weyl_order == 2);
  CHECK(build_lattice("G2").weyl_order == 12);
  CHECK(build_lattice("A3").weyl_order == 24);
  CHECK(build_lattice("F4").weyl_order == 1152);
  CHECK(build_lattice("D5").weyl_order == 1920);
  CHECK(build_lattice("E6").weyl_order == 51840);
  CHECK(build_lattice("B", 7).weyl_order == 128ll * 5040);  // 2^7 7!
  CHECK_THROWS_AS(build_lattice("H3"), std::invalid_argument);
}

TEST_CASE("generators are unimodular involutions") {
  for (const std::string name : {"G2", "A3", "F4", "D5", "E6"}) {
    auto L = build_lattice(name);
    for (const auto& g : L.weyl_generators) {
      long long det = g.determinant();
      CHECK((det == 1 || det == -1));
      CHECK(g * g == IntMatrix::identity(L.rank));
    }
  }
  auto b3 = build_lattice("B", 3);
  for (const auto& g : b3.weyl_generators) CHECK(g * g == IntMatrix::identity(3));
}

TEST_CASE("orbit decompositions") {
  auto e6 = build_lattice("E6");
  auto dec = orbits_mod(e6, 3);
  // the 72 roots reduce to a single orbit of size 72
  bool has72 = false;
  for (long long s : dec.orbit_sizes)
    if (s == 72) has72 = true;
  CHECK(has72);
  // zero is always a singleton orbit
  CHECK(dec.orbit_sizes[0] == 1);
  CHECK(dec.orbit_reps[0] == std::vector<int>(6, 0));

  auto a3 = build_lattice("A3");
  auto dec3 = orbits_mod(a3, 4);
  auto roots = integer_orbit(a3, a3.omega_seed);
  CHECK(roots.size() == 12);
  bool has12 = false;
  for (long long s : dec3.orbit_sizes)
    if (s == 12) has12 = true;
  CHECK(has12);

  long long total = 0;
  for (long long s : dec3.orbit_sizes) total += s;
  CHECK(total == 64);  // 4^3 residues partitioned

  CHECK_THROWS_AS(orbits_mod(build_lattice("B", 14), 4), std::runtime_error);  // guard
}

TEST_CASE("orbit sizes divide the Weyl group order") {
  for (const std::string name : {"A1", "G2", "A3", "F4", "D5", "E6"}) {
    auto L = build_lattice(name);
    auto dec = orbits_mod(L, L.default_modulus);
    for (long long s : dec.orbit_sizes) CHECK(L.weyl_order % s == 0);
  }
}

TEST_CASE("generation test basics") {
  CHECK(generates_mod({{1, 0}, {0, 1}}, 2, 4));
  CHECK_FALSE(generates_mod({{2, 0}, {0, 1}}, 2, 4));  // (2,0) dies mod 2

  // the 2^7 spinor classes of the B7 weight lattice generate mod 4
  auto b7 = build_lattice("B", 7);
  auto spinors = integer_orbit(b7, b7.omega_seed);
  CHECK(spinors.size() == 128);
  std::vector<std::vector<int>> reduced;
  for (const auto& s : spinors) {
    std::vector<int> v(7);
    for (int i = 0; i < 7; ++i) v[i] = (int)(((s[i] % 4) + 4) % 4);
    reduced.push_back(v);
  }
  CHECK(generates_mod(reduced, 7, 4));
}

TEST_CASE("generation test agrees with additive closure on random mod-6 sets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<int>> vecs;
    int size = 1 + (int)(rng() % 4);
    for (int s = 0; s < size; ++s)
      vecs.push_back({(int)(rng() % 6), (int)(rng() % 6), (int)(rng() % 6)});
    CHECK(generates_mod(vecs, 3, 6) == generates_mod_bruteforce(vecs, 3, 6));
  }
}

TEST_CASE("symrank reproduces the reference values") {
  CHECK(symrank(build_lattice("A1"), 4).value == 2);
  CHECK(symrank(build_lattice("G2"), 4).value == 6);
  CHECK(symrank(build_lattice("A3"), 4).value == 12);
  CHECK(symrank(build_lattice("F4"), 4).value == 24);
  CHECK(symrank(build_lattice("D5"), 4).value == 40);
  CHECK(symrank(build_lattice("E6"), 3).value == 72);
  CHECK(symrank(build_lattice("B", 7), 4).value == 128);
}

TEST_CASE("symrank of a rank-1 lattice with the trivial group is 1") {
  LatticeAction trivial;
  trivial.name = "Z";
  trivial.rank = 1;
  trivial.weyl_order = 1;
  auto sr = symrank(trivial, 4);
  CHECK(sr.value == 1);  // a single odd residue generates
}

TEST_CASE("symrank certificate properties") {
  auto sr = symrank(build_lattice("F4"), 4);
  CHECK(sr.search_exhausted);
  CHECK(sr.smaller_orbits_do_not_generate);
  // the witness is a union of orbits that generates
  std::vector<std::vector<int>> members;
  for (int oi : sr.witness_orbits)
    for (const auto& v : sr.orbits.orbit_members[oi]) members.push_back(v);
  CHECK((long long)members.size() == sr.value);
  CHECK(generates_mod(members, 4, 4));
}

TEST_CASE("symrank is invariant under reordering the F4 simple roots") {
  // reversing the Bourbaki order swaps long and short simple roots
  auto f4 = build_lattice("F4");
  LatticeAction reordered = f4;
  std::vector<int> perm = {3, 2, 1, 0};
  for (auto& g : reordered.weyl_generators) {
    IntMatrix m = IntMatrix::identity(4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.at(r, c) = g.at(perm[r], perm[c]);
    g = m;
  }
  CHECK(symrank(reordered, 4).value == 24);
}

TEST_CASE("B-family symrank is basis independent") {
  // in doubled standard coordinates the weight lattice has basis
  // (2e_1, ..., 2e_{n-1}, (1, ..., 1)) and the signed permutations act
  // integrally after the change of basis
  for (int n : {2, 3}) {
    auto weight_basis = build_lattice("B", n);
    ExactMatrix basis(n, n, 1ll);
    for (int i = 0; i + 1 < n; ++i) basis.at(i, i) = Cyclotomic::from_rational(Rational(2), 1);
    for (int r = 0; r < n; ++r) basis.at(r, n - 1) = Cyclotomic::from_rational(Rational(1), 1);
    ExactMatrix basis_inv = basis.inverse();

    // signed permutation generators in standard coordinates
    std::vector<ExactMatrix> std_gens;
    for (int i = 0; i + 1 < n; ++i) {
      ExactMatrix m = ExactMatrix::identity(n, 1);
      m.at(i, i) = m.at(i + 1, i + 1) = Cyclotomic::from_rational(Rational(0), 1);
      m.at(i, i + 1) = m.at(i + 1, i) = Cyclotomic::from_rational(Rational(1), 1);
      std_gens.push_back(m);
    }
    ExactMatrix flip = ExactMatrix::identity(n, 1);
    flip.at(n - 1, n - 1) = Cyclotomic::from_rational(Rational(-1), 1);
    std_gens.push_back(flip);

    LatticeAction doubled;
    doubled.name = "B" + std::to_string(n) + " (doubled coords)";
    doubled.rank = n;
    doubled.weyl_order = weight_basis.weyl_order;
    for (const auto& g : std_gens) {
      ExactMatrix conj = basis_inv * g * basis;
      IntMatrix m;
      m.n = n;
      m.a.resize((size_t)n * n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const Cyclotomic& e = conj.at(r, c);
          REQUIRE(e.is_rational());
          REQUIRE(e.rational_value().is_integer());
          m.at(r, c) = e.rational_value().num();
        }
      doubled.weyl_generators.push_back(std::move(m));
    }
    // the two transposition sets generate the same group: conjugated gens
    // are a (smaller) generating set of the same signed permutations
    CHECK(symrank(doubled, 4).value == symrank(weight_basis, 4).value);
    CHECK(symrank(weight_basis, 4).value == (1ll << n));
  }
}
