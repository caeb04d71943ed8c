#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyrep/chartab.hpp"
#include "polyrep/constructions.hpp"
#include "polyrep/fixtures.hpp"

using namespace polyrep;

TEST_CASE("heisenberg p=3") {
  auto h = heisenberg_verify(3);
  CHECK(h.relations_ok);
  CHECK(h.span_ok);
  CHECK(h.rho_matches_paper);
  CHECK(h.image_order == 216);
  CHECK(h.image_n.member_set.size() == 9);

  // the commutator is zeta I, exactly
  ExactMatrix comm = h.P * h.D * h.P.inverse() * h.D.inverse();
  CHECK(comm == ExactMatrix::identity(3, 3).scaled(Cyclotomic::zeta(3)));
}

TEST_CASE("heisenberg guards") {
  CHECK_THROWS_WITH_AS(heisenberg_verify(4), "p must be an odd prime", std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_verify(7), std::runtime_error);  // needs the opt-in flag
}

TEST_CASE("torus point orders") {
  CHECK(torus_point_order(TorusForm::circle, Rational(0), Rational(1)) == 4);
  CHECK(torus_point_order(TorusForm::x2_plus_3y2, Rational(1, 2), Rational(1, 2)) == 6);
  CHECK(torus_point_order(TorusForm::circle, Rational(1), Rational(0)) == 1);
  CHECK(torus_point_order(TorusForm::split, Rational(-1), Rational(0)) == 2);
  CHECK_THROWS_AS(torus_point_order(TorusForm::circle, Rational(1), Rational(1)),
                  std::domain_error);
}

TEST_CASE("monomial psi on the worked example") {
  Cyclotomic one = Cyclotomic::from_rational(Rational(1), 1);
  Cyclotomic two = Cyclotomic::from_rational(Rational(2), 1);
  ExactMatrix d = monomial_matrix({two, one, one}, {0, 1, 2});
  ExactMatrix out = monomial_psi(d);
  std::vector<Rational> expect = {Rational(2), Rational(1),    Rational(2),
                                  Rational(1), Rational(1, 2), Rational(1, 2)};
  for (int i = 0; i < 6; ++i) {
    CHECK(out.at(i, i).rational_value() == expect[i]);
    for (int j = 0; j < 6; ++j)
      if (i != j) CHECK(out.at(i, j).is_zero());
  }

  ExactMatrix scalar = monomial_matrix({two, two, two}, {2, 0, 1});
  ExactMatrix perm_image = monomial_psi(scalar);
  CHECK_FALSE(perm_image.is_identity());  // permutation part survives
  ExactMatrix diag_scalar = monomial_matrix({two, two, two}, {0, 1, 2});
  CHECK(monomial_psi(diag_scalar).is_identity());

  CHECK_THROWS_AS(monomial_matrix({one, one, Cyclotomic()}, {0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(monomial_psi(ExactMatrix::identity(2)), std::invalid_argument);
  ExactMatrix not_monomial = ExactMatrix::from_integers(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(monomial_psi(not_monomial), std::invalid_argument);
}

TEST_CASE("wps phi kernel forms") {
  Cyclotomic t = Cyclotomic::from_rational(Rational(3, 2), 1);
  for (int m : {1, 2, 3}) {
    ExactMatrix tI2 = ExactMatrix::identity(2, 1).scaled(t);
    ExactMatrix tIm = ExactMatrix::identity(m, 1).scaled(t);
    CHECK(wps_phi(1, m, tI2, tIm).is_identity());
    CHECK(wps_phi(1, m, tI2, tIm).rows() == 2 * m);
  }
  Cyclotomic t2 = t * t;
  ExactMatrix tI2 = ExactMatrix::identity(2, 1).scaled(t);
  ExactMatrix t2I1 = ExactMatrix::identity(1, 1).scaled(t2);
  CHECK(wps_phi(2, 1, tI2, t2I1).is_identity());
  CHECK(wps_phi(2, 1, tI2, t2I1).rows() == 3);

  ExactMatrix singular = ExactMatrix::from_integers(2, 2, {1, 1, 1, 1});
  CHECK_THROWS_WITH_AS(wps_phi(1, 1, singular, ExactMatrix::identity(1)), "not invertible",
                       std::domain_error);
}

TEST_CASE("symmetric square is multiplicative") {
  ExactMatrix a = ExactMatrix::from_rationals(
      2, 2, {Rational(1), Rational(2), Rational(-1, 2), Rational(3)});
  ExactMatrix b = ExactMatrix::from_rationals(
      2, 2, {Rational(0), Rational(1), Rational(1), Rational(-2)});
  CHECK(symmetric_square(a) * symmetric_square(b) == symmetric_square(a * b));
  ExactMatrix tI = ExactMatrix::identity(2, 1).scaled(Cyclotomic::from_rational(Rational(5), 1));
  Cyclotomic t25 = Cyclotomic::from_rational(Rational(25), 1);
  CHECK(symmetric_square(tI) == ExactMatrix::identity(3, 1).scaled(t25));
}

TEST_CASE("gl2z4 structure report") {
  auto rep = gl2z4_structure();
  CHECK(rep.gl2z4->order() == 96);
  CHECK(rep.sl2z4->order() == 48);
  for (const auto& [name, ok] : rep.assertions) {
    INFO(name);
    CHECK(ok);
  }
}

TEST_CASE("catalog blocks") {
  auto block = polyhedral_catalog(false, NType::c2, PType::a4);
  REQUIRE(block.size() == 2);
  CHECK(block[0].name == "A4 x C2");
  CHECK(block[1].name == "Atilde4");
  CHECK(is_isomorphic(block[1].group, sl2_mod(3)).isomorphic);

  auto a5_block = polyhedral_catalog(false, NType::c2c2, PType::a5);
  REQUIRE(a5_block.size() == 2);
  for (const auto& rec : a5_block) CHECK(rec.group->order() == 240);

  auto trivial = polyhedral_catalog(false, NType::trivial, PType::a4);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].group->order() == 12);

  auto everything = polyhedral_catalog(true);
  CHECK(everything.size() == table2_reference().size());
}

TEST_CASE("verify_extension worked examples") {
  CHECK(verify_extension(gl2_mod(3), NType::c2, PType::s4));
  CHECK_FALSE(verify_extension(build_catalog_group("A4 x C2"), NType::c2, PType::s4));
  CHECK(verify_extension(gl2_mod(4), NType::c2c2, PType::s4));
  CHECK(verify_extension(alternating4(), NType::trivial, PType::a4));
}

TEST_CASE("stem covers separate by transposition preimage orders") {
  CHECK(transposition_preimage_orders(build_catalog_group("Stilde4+")) ==
        std::vector<int>{2});
  CHECK(transposition_preimage_orders(build_catalog_group("Stilde4-")) ==
        std::vector<int>{4});
}

TEST_CASE("binary octahedral model") {
  auto bo = binary_octahedral();
  CHECK(bo->order() == 48);
  // unique involution: the quaternion -1
  int involutions = 0;
  for (int x = 0; x < bo->order(); ++x)
    if (bo->element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  // order-8 elements exist (order-4 transposition preimages times the order-6 classes)
  int order8 = 0;
  for (int x = 0; x < bo->order(); ++x)
    if (bo->element_order(x) == 8) ++order8;
  CHECK(order8 == 12);
}

TEST_CASE("reference polyhedral groups") {
  CHECK(reference_polyhedral(PType::a4)->order() == 12);
  CHECK(reference_polyhedral(PType::s4)->order() == 24);
  CHECK(reference_polyhedral(PType::a5)->order() == 60);
  CHECK(sl2_mod(5)->order() == 120);
}
