#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "polyrep/chartab.hpp"
#include "polyrep/constructions.hpp"
#include "polyrep/laws.hpp"

using namespace polyrep;

namespace {

std::vector<long long> degrees_of(const CharacterTable& t) {
  std::vector<long long> d;
  for (const auto& chi : t.irreducibles) d.push_back(chi.degree);
  return d;
}

// Degree-multiset oracle: enumerate all multisets of divisors of |G| with
// k entries and squares summing to |G|; the table's degrees must be the
// unique solution when there is one.
void enumerate_degree_multisets(long long order, int k, long long min_d,
                                std::vector<long long>& cur,
                                std::vector<std::vector<long long>>& out) {
  long long remaining = order;
  for (long long d : cur) remaining -= d * d;
  if ((int)cur.size() == k) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (long long d = min_d; d * d <= remaining; ++d) {
    if (order % d != 0) continue;
    cur.push_back(d);
    enumerate_degree_multisets(order, k, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long long>> degree_solutions(long long order, int k) {
  std::vector<long long> cur;
  std::vector<std::vector<long long>> out;
  enumerate_degree_multisets(order, k, 1, cur, out);
  return out;
}

}  // namespace

TEST_CASE("character table of C2") {
  auto t = character_table(cyclic_group(2));
  REQUIRE(t.irreducibles.size() == 2);
  Cyclotomic one = Cyclotomic::from_rational(Rational(1), t.exponent);
  CHECK(t.irreducibles[0].values == std::vector<Cyclotomic>{one, one});
  CHECK(t.irreducibles[1].values == std::vector<Cyclotomic>{one, -one});
}

TEST_CASE("degrees match the unique divisor-multiset solution") {
  struct Case {
    GroupPtr g;
    std::vector<long long> expected;
  };
  std::vector<Case> cases = {{symmetric3(), {1, 1, 2}},
                             {alternating4(), {1, 1, 1, 3}},
                             {quaternion8(), {1, 1, 1, 1, 2}}};
  for (auto& c : cases) {
    auto t = character_table(c.g);
    CHECK(degrees_of(t) == c.expected);
    auto solutions = degree_solutions(c.g->order(), (int)t.irreducibles.size());
    REQUIRE(solutions.size() == 1);  // the oracle pins the degrees uniquely
    CHECK(solutions[0] == c.expected);
  }
}

TEST_CASE("rdim_split worked examples") {
  auto check_rdim = [](const GroupPtr& g, long long expected) {
    auto t = character_table(g);
    auto mins = minimal_normal_subgroups(g);
    auto r = rdim_split(t, mins);
    CHECK(r.value == expected);
    // witness kernels intersect trivially
    const auto& cc = g->classes();
    std::vector<char> kernel(cc.members.size(), 1);
    for (const auto& set : r.witness)
      for (int ci : set)
        for (size_t j = 0; j < kernel.size(); ++j)
          kernel[j] = kernel[j] && t.irreducibles[ci].kernel_class[j];
    long long kernel_size = 0;
    for (size_t j = 0; j < kernel.size(); ++j)
      if (kernel[j]) kernel_size += (long long)cc.members[j].size();
    CHECK(kernel_size == 1);
  };
  check_rdim(cyclic_group(2), 1);
  check_rdim(quaternion8(), 2);
  check_rdim(alternating4(), 3);
  check_rdim(symmetric4(), 3);
  check_rdim(alternating5(), 3);
  check_rdim(heisenberg_verify(3).image, 8);
}

TEST_CASE("rdim oracle equivalence for small groups") {
  for (const GroupPtr& g :
       {cyclic_group(2), cyclic_group(6), symmetric3(), quaternion8(), alternating4(),
        symmetric4(), sl2_mod(3), klein_four()}) {
    auto t = character_table(g);
    auto mins = minimal_normal_subgroups(g);
    CHECK(rdim_split(t, mins).value == rdim_split_exhaustive(t));
  }
}

TEST_CASE("rdim oracle equivalence for mid-size catalog groups") {
  for (const std::string name : {"GL2(Z/4)", "C4^2 : S3", "A5 x C2", "Stilde4- x C2"}) {
    GroupPtr g = build_catalog_group(name);
    auto t = character_table(g);
    REQUIRE(t.irreducibles.size() <= 24);
    auto mins = minimal_normal_subgroups(g);
    CHECK(rdim_split(t, mins).value == rdim_split_exhaustive(t));
  }
}

TEST_CASE("rdim witness takes the lexicographically smallest optimum") {
  // the Klein four group has three optimal witnesses (any two distinct
  // nontrivial characters); the tie-break must pick indices {1, 2}
  auto g = klein_four();
  auto t = character_table(g);
  auto r = rdim_split(t, minimal_normal_subgroups(g));
  CHECK(r.value == 2);
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0] == std::vector<int>{1});
  CHECK(r.witness[1] == std::vector<int>{2});
}

TEST_CASE("rational lower bounds") {
  auto check_lower = [](const GroupPtr& g, long long expected) {
    auto t = character_table(g);
    auto mins = minimal_normal_subgroups(g);
    CHECK(rdim_rational_lower(t, mins).value == expected);
  };
  check_lower(cyclic_group(3), 2);  // the two faithful characters form one orbit
  check_lower(cyclic_group(2), 1);
  check_lower(alternating4(), 3);  // the degree-3 character is rational and faithful
  check_lower(cyclic_group(5), 4);  // all four faithful characters are conjugate
  check_lower(quaternion8(), 2);    // the quaternionic character has rational values
}

TEST_CASE("frobenius schur indicators") {
  auto q8 = quaternion8();
  auto t = character_table(q8);
  CHECK(frobenius_schur(t, 0) == 1);  // trivial character sorts first (all values 1)
  // the degree-2 character of Q8 is quaternionic
  int two_dim = -1;
  for (size_t i = 0; i < t.irreducibles.size(); ++i)
    if (t.irreducibles[i].degree == 2) two_dim = (int)i;
  REQUIRE(two_dim >= 0);
  CHECK(frobenius_schur(t, two_dim) == -1);

  auto c3 = cyclic_group(3);
  auto t3 = character_table(c3);
  int faithful = -1;
  for (size_t i = 0; i < t3.irreducibles.size(); ++i) {
    bool trivial_kernel = true;
    for (size_t j = 0; j < t3.class_sizes.size(); ++j)
      if (j != 0 && t3.irreducibles[i].kernel_class[j]) trivial_kernel = false;
    if (t3.irreducibles[i].degree == 1 && trivial_kernel && faithful < 0) faithful = (int)i;
  }
  REQUIRE(faithful >= 0);
  CHECK(frobenius_schur(t3, faithful) == 0);
}

TEST_CASE("galois orbits of C3 pair the faithful characters") {
  auto t = character_table(cyclic_group(3));
  auto orbits = galois_orbits(t);
  std::multiset<size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<size_t>{1, 2});
}

TEST_CASE("rdim is monotone under the materialized subgroup pairs") {
  auto rdim_of = [](const GroupPtr& g) {
    auto t = character_table(g);
    return rdim_split(t, minimal_normal_subgroups(g)).value;
  };

  auto gl3 = gl2_mod(3);
  long long rdim_gl3 = rdim_of(gl3);
  auto sl3 = sl2_mod(3);
  CHECK(rdim_of(sl3) <= rdim_gl3);

  auto rep = gl2z4_structure();
  long long rdim_gl2z4 = rdim_of(rep.gl2z4);
  auto res = gl2_mod_closure(4);
  std::map<std::string, int> id_of;
  for (int i = 0; i < (int)res.elements.size(); ++i)
    id_of.emplace(res.elements[i].encoding(), i);
  auto h_sub = make_subgroup(res.group, {id_of.at(ResidueMatrix(4, 2, 2, {0, 1, 1, 0}).encoding()),
                                         id_of.at(ResidueMatrix(4, 2, 2, {3, 3, 1, 0}).encoding())});
  CHECK(rdim_of(h_sub.group) <= rdim_gl2z4);
  CHECK(rdim_of(rep.sl2z4) <= rdim_gl2z4);

  auto heis = heisenberg_verify(3);
  CHECK(rdim_of(heis.image_n.group) <= rdim_of(heis.image));
}

TEST_CASE("rdim of G x C2 is at most rdim of G plus one") {
  auto rdim_of = [](const GroupPtr& g) {
    auto t = character_table(g);
    return rdim_split(t, minimal_normal_subgroups(g)).value;
  };
  auto records = polyhedral_catalog(true);
  auto c2 = cyclic_group(2);
  for (const auto& rec : records) {
    long long base = rdim_of(rec.group);
    auto prod = product_group(ProductKind::direct, rec.group, c2).group;
    CHECK(rdim_of(prod) <= base + 1);
  }
}

TEST_CASE("witness minimality is exhaustively confirmed on small tables") {
  // rdim_split cross-checks itself against the exhaustive oracle whenever
  // the table has at most 12 irreducibles; a disagreement throws.
  for (const GroupPtr& g : {symmetric4(), sl2_mod(3), quaternion8()}) {
    auto t = character_table(g);
    auto r = rdim_split(t, minimal_normal_subgroups(g));
    CHECK(r.optimality_exhaustive);
  }
}

TEST_CASE("character values are algebraic integers at the group exponent") {
  auto t = character_table(build_catalog_group("SL2(Z/4)"));
  for (const auto& chi : t.irreducibles)
    for (const auto& v : chi.values) {
      CHECK(v.conductor() == t.exponent);
      for (const auto& c : v.coeffs()) CHECK(c.is_integer());
    }
}

TEST_CASE("character table caps") {
  auto big = product_group(ProductKind::direct, cyclic_group(101), cyclic_group(101)).group;
  CHECK_THROWS_AS(character_table(big), std::runtime_error);
}
