#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "polyrep/constructions.hpp"
#include "polyrep/fixtures.hpp"
#include "polyrep/laws.hpp"

using namespace polyrep;

namespace {

ResidueMatrix rm4(long long a, long long b, long long c, long long d) {
  return ResidueMatrix(4, 2, 2, {a, b, c, d});
}

// independent conjugation-partition oracle: brute force over all of G
std::vector<size_t> class_sizes_bruteforce(const Group& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<size_t> sizes;
  for (int x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<int> orbit;
    for (int h = 0; h < g.order(); ++h) orbit.insert(g.conj(h, x));
    for (int y : orbit) cls[y] = (int)sizes.size();
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("closure of the displayed mod-4 matrices is S3") {
  ResidueMatrixLaw law{2, 4};
  auto res = close_group(law, {rm4(0, 1, 1, 0), rm4(3, 3, 1, 0)});
  CHECK(res.group->order() == 6);
  CHECK(is_isomorphic(res.group, symmetric3()).isomorphic);
}

TEST_CASE("projective closure of P and D has order p^2") {
  auto h = heisenberg_verify(3);
  ProjectiveMatrixLaw law{3, 3};
  auto res = close_group(law, {canonical_projective(h.P), canonical_projective(h.D)});
  CHECK(res.group->order() == 9);
}

TEST_CASE("closure of the identity alone is trivial") {
  PermutationLaw law{3};
  auto res = close_group(law, {law.identity()});
  CHECK(res.group->order() == 1);
}

TEST_CASE("closure guard and generator validation") {
  PermutationLaw law{6};
  ClosureOptions opt;
  opt.cap = 10;
  CHECK_THROWS_WITH_AS(close_group(law, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, opt),
                       "closure cap", std::runtime_error);
  ResidueMatrixLaw mlaw{2, 4};
  CHECK_THROWS_WITH_AS(close_group(mlaw, {rm4(2, 0, 0, 1)}), "not invertible",
                       std::domain_error);
}

TEST_CASE("conjugacy classes") {
  auto c6 = cyclic_group(6);
  CHECK(c6->classes().members.size() == 6);  // abelian: all singletons

  ResidueMatrixLaw law{2, 4};
  auto s3 = close_group(law, {rm4(0, 1, 1, 0), rm4(3, 3, 1, 0)}).group;
  std::vector<size_t> sizes;
  for (const auto& m : s3->classes().members) sizes.push_back(m.size());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});
  CHECK(class_sizes_bruteforce(*s3) == std::vector<size_t>{1, 2, 3});

  auto gl3 = gl2_mod(3);
  CHECK(gl3->classes().members.size() == 8);
  CHECK(class_sizes_bruteforce(*gl3).size() == 8);

  // sizes divide the order and sum to it
  long long total = 0;
  for (const auto& m : gl3->classes().members) {
    CHECK(gl3->order() % (long long)m.size() == 0);
    total += (long long)m.size();
  }
  CHECK(total == gl3->order());
}

TEST_CASE("minimal normal subgroups") {
  auto a5 = alternating5();
  auto mins = minimal_normal_subgroups(a5);
  REQUIRE(mins.size() == 1);
  CHECK((int)mins[0].member_set.size() == 60);  // simple: the group itself

  auto q8 = quaternion8();
  auto qmins = minimal_normal_subgroups(q8);
  REQUIRE(qmins.size() == 1);
  CHECK(qmins[0].member_set.size() == 2);  // the center {+-1}
  auto center = center_ids(*q8);
  CHECK(qmins[0].member_set == center);

  // oracle: enumerate every subgroup of Q8 from generator pairs, keep the
  // normal nontrivial ones, and take the inclusion-minimal ones
  std::set<std::vector<int>> normals;
  for (int a = 1; a < q8->order(); ++a)
    for (int b = a; b < q8->order(); ++b) {
      auto sub = subgroup_element_ids(*q8, {a, b});
      if ((int)sub.size() < q8->order() && sub.size() > 1 && is_normal(*q8, sub))
        normals.insert(sub);
    }
  std::set<std::vector<int>> minimal_oracle;
  for (const auto& n : normals) {
    bool is_min = true;
    for (const auto& m : normals)
      if (m != n && std::includes(n.begin(), n.end(), m.begin(), m.end())) is_min = false;
    if (is_min) minimal_oracle.insert(n);
  }
  REQUIRE(minimal_oracle.size() == 1);
  CHECK(*minimal_oracle.begin() == qmins[0].member_set);

  auto klein = klein_four();
  CHECK(minimal_normal_subgroups(klein).size() == 3);
}

TEST_CASE("quotients") {
  auto s4 = symmetric4();
  auto whole = quotient_group(s4, subgroup_element_ids(*s4, s4->generator_ids()));
  CHECK(whole.group->order() == 1);

  // GL2(F3) / {+-I} is S4
  auto gl3 = gl2_mod(3);
  auto center = center_ids(*gl3);
  REQUIRE(center.size() == 2);
  auto q = quotient_group(gl3, center);
  CHECK(q.group->order() == 24);
  CHECK(is_isomorphic(q.group, symmetric4()).isomorphic);

  // projection is a homomorphism on all pairs (|G| <= 500)
  for (int x = 0; x < gl3->order(); ++x)
    for (int y = 0; y < gl3->order(); ++y)
      REQUIRE(q.projection[gl3->mult(x, y)] ==
              q.group->mult(q.projection[x], q.projection[y]));

  // Heisenberg image modulo (C_3)^2 has order 24
  auto h = heisenberg_verify(3);
  auto hq = quotient_group(h.image, h.image_n.member_set);
  CHECK(hq.group->order() == 24);

  // non-normal subgroup is rejected
  auto transposition = make_subgroup(s4, {s4->generator_ids()[1]});
  CHECK_THROWS_WITH_AS(quotient_group(s4, transposition.member_set), "not normal",
                       std::invalid_argument);
}

TEST_CASE("products") {
  auto klein = product_group(ProductKind::direct, cyclic_group(2), cyclic_group(2)).group;
  CHECK(klein->order() == 4);
  CHECK(is_isomorphic(klein, klein_four()).isomorphic);

  auto c4sq_c3 = build_catalog_group("C4^2 : C3");
  CHECK(c4sq_c3->order() == 48);

  // semidirect with the trivial action is the direct product
  GroupPtr a4 = alternating4();
  std::vector<int> idperm(a4->order());
  for (int i = 0; i < a4->order(); ++i) idperm[i] = i;
  std::vector<std::vector<int>> trivial(2, idperm);
  auto semi = product_group(ProductKind::semidirect, a4, cyclic_group(2), trivial).group;
  auto direct = product_group(ProductKind::direct, a4, cyclic_group(2)).group;
  CHECK(is_isomorphic(semi, direct).isomorphic);

  // invalid actions are rejected
  std::vector<int> bad = idperm;
  std::swap(bad[0], bad[1]);  // does not fix the identity
  CHECK_THROWS_AS(
      product_group(ProductKind::semidirect, a4, cyclic_group(2), {idperm, bad}),
      std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
  auto gl2z4 = gl2_mod(4);
  auto rep = gl2z4_structure();  // includes the sign-action isomorphism
  CHECK(rep.gl2z4->order() == 96);

  auto plus = build_catalog_group("Stilde4+");
  auto minus = build_catalog_group("Stilde4-");
  auto iso = is_isomorphic(plus, minus);
  CHECK_FALSE(iso.isomorphic);
  CHECK(iso.reason.find("spectrum") != std::string::npos);

  auto self = is_isomorphic(plus, plus);
  CHECK(self.isomorphic);
  for (int x = 0; x < plus->order(); ++x) CHECK(self.witness[x] == x);

  auto big = product_group(ProductKind::direct, cyclic_group(101), cyclic_group(101)).group;
  CHECK(big->order() == 10201);
  CHECK_THROWS_AS(is_isomorphic(big, big), std::invalid_argument);  // order cap
}

TEST_CASE("isomorphism witness is a bijective homomorphism") {
  auto sl = sl2_mod(4);
  auto rep = gl2z4_structure();
  auto iso = is_isomorphic(sl, rep.sl2z4);
  REQUIRE(iso.isomorphic);
  std::vector<bool> hit(sl->order(), false);
  for (int x = 0; x < sl->order(); ++x) {
    CHECK(!hit[iso.witness[x]]);
    hit[iso.witness[x]] = true;
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    int x = (int)(rng() % sl->order()), y = (int)(rng() % sl->order());
    CHECK(iso.witness[sl->mult(x, y)] ==
          rep.sl2z4->mult(iso.witness[x], iso.witness[y]));
  }
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalog") {
  auto records = polyhedral_catalog(true);
  for (const auto& rec : records) CHECK(is_isomorphic(rec.group, rec.group).isomorphic);
  for (size_t i = 0; i < records.size(); ++i)
    for (size_t j = i + 1; j < records.size(); ++j) {
      if (records[i].group->order() != records[j].group->order()) continue;
      bool ij = is_isomorphic(records[i].group, records[j].group).isomorphic;
      bool ji = is_isomorphic(records[j].group, records[i].group).isomorphic;
      CHECK(ij == ji);
    }
}

TEST_CASE("isomorphic groups share a fingerprint") {
  auto rep = gl2z4_structure();
  auto sl = sl2_mod(4);
  CHECK(fingerprint(*sl) == fingerprint(*rep.sl2z4));
  auto s4_matrices = quotient_group(gl2_mod(3), center_ids(*gl2_mod(3))).group;
  CHECK(fingerprint(*s4_matrices) == fingerprint(*symmetric4()));
}

TEST_CASE("fingerprints") {
  auto c6 = cyclic_group(6);
  Fingerprint f = fingerprint(*c6);
  CHECK(f.spectrum == std::vector<std::pair<int, long long>>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  Fingerprint fa4 = fingerprint(*alternating4());
  CHECK(fa4.center_order == 1);
  CHECK(fa4.abelian_invariants == std::vector<long long>{3});

  Fingerprint fq8 = fingerprint(*quaternion8());
  CHECK(fq8.spectrum == std::vector<std::pair<int, long long>>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(fq8.derived_order == 2);
  CHECK(fq8.abelian_invariants == std::vector<long long>{2, 2});

  CHECK(fingerprint(*klein_four()).abelian_invariants == std::vector<long long>{2, 2});
  CHECK(fingerprint(*cyclic_group(12)).abelian_invariants == std::vector<long long>{12});
  CHECK(fingerprint(*symmetric4()).abelian_invariants == std::vector<long long>{2});
}

TEST_CASE("Lagrange holds for subgroups discovered in the catalog groups") {
  for (const std::string name : {"S4 x C2", "GL2(Z/4)", "C4^2 : C3", "Atilde5"}) {
    auto g = build_catalog_group(name);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 8; ++t) {
      std::vector<int> gens = {(int)(rng() % g->order()), (int)(rng() % g->order())};
      auto sub = subgroup_element_ids(*g, gens);
      CHECK(g->order() % (long long)sub.size() == 0);
    }
  }
}

TEST_CASE("the derived Cayley table agrees with the law on every pair") {
  // tables are filled from BFS provenance in O(n^2); compare every entry
  // against a direct matrix product
  auto res = gl2_mod_closure(4);
  for (int x = 0; x < res.group->order(); ++x)
    for (int y = 0; y < res.group->order(); ++y) {
      ResidueMatrix direct = res.elements[x] * res.elements[y];
      REQUIRE(res.elements[res.group->mult(x, y)] == direct);
    }
  // associativity and identity neutrality on samples
  std::mt19937_64 rng(41);
  for (int t = 0; t < 500; ++t) {
    int a = (int)(rng() % res.group->order());
    int b = (int)(rng() % res.group->order());
    int c = (int)(rng() % res.group->order());
    CHECK(res.group->mult(res.group->mult(a, b), c) ==
          res.group->mult(a, res.group->mult(b, c)));
    CHECK(res.group->mult(a, 0) == a);
    CHECK(res.group->mult(0, a) == a);
    CHECK(res.group->mult(a, res.group->inverse(a)) == 0);
  }
}

TEST_CASE("element ids are reproducible across closures") {
  ResidueMatrixLaw law{2, 4};
  auto a = close_group(law, {rm4(1, 1, 0, 1), rm4(1, 0, 1, 1)});
  auto b = close_group(law, {rm4(1, 0, 1, 1), rm4(1, 1, 0, 1)});  // other order
  REQUIRE(a.group->order() == b.group->order());
  for (int i = 0; i < a.group->order(); ++i)
    CHECK(a.group->element_encoding(i) == b.group->element_encoding(i));
}

TEST_CASE("quotient homomorphism sampled on a larger group") {
  auto g = build_catalog_group("A5 x C2^2");  // order 240: sample 10^4 pairs
  auto mins = minimal_normal_subgroups(g);
  bool tested = false;
  for (const auto& m : mins) {
    if (m.member_set.size() != 2) continue;
    auto q = quotient_group(g, m.member_set);
    CHECK(q.group->order() == 120);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10000; ++t) {
      int x = (int)(rng() % g->order()), y = (int)(rng() % g->order());
      REQUIRE(q.projection[g->mult(x, y)] ==
              q.group->mult(q.projection[x], q.projection[y]));
    }
    tested = true;
    break;
  }
  CHECK(tested);
}
