#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "polyrep/exact_matrix.hpp"

using namespace polyrep;

namespace {

Cyclotomic q(long long n, long long d, long long conductor) {
  return Cyclotomic::from_rational(Rational(n, d), conductor);
}

// small deterministic random cyclotomic values
Cyclotomic random_cyclo(std::mt19937_64& rng, long long conductor) {
  Cyclotomic c = Cyclotomic::from_rational(Rational((long long)(rng() % 7) - 3), conductor);
  c = c + Cyclotomic::zeta(conductor, rng() % conductor) *
              Cyclotomic::from_rational(Rational((long long)(rng() % 5) - 2,
                                                 1 + (long long)(rng() % 2)),
                                        conductor);
  return c;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic on the worked examples") {
  auto z4 = Cyclotomic::zeta(4);
  CHECK(cyclo_arith(z4, z4, CycloOp::mul) == q(-1, 1, 4));

  auto z3 = Cyclotomic::zeta(3);
  CHECK(cyclo_arith(z3, z3 * z3, CycloOp::add) == q(-1, 1, 3));

  auto z8 = Cyclotomic::zeta(8);
  auto sqrt2 = z8 + z8.inverse();
  CHECK(sqrt2 * sqrt2 == q(2, 1, 8));
}

TEST_CASE("cyclotomic error paths") {
  CHECK_THROWS_WITH_AS(cyclo_arith(q(0, 1, 4), q(0, 1, 4), CycloOp::inv_of_a),
                       "division by zero", std::domain_error);
  CHECK_THROWS_WITH_AS(cyclo_arith(Cyclotomic::zeta(3), Cyclotomic::zeta(4), CycloOp::add),
                       "conductor mismatch", std::invalid_argument);
}

TEST_CASE("inverses are exact for conductors up to 24") {
  std::mt19937_64 rng(7);
  for (long long m : {1, 2, 3, 4, 8, 12, 15, 16, 24}) {
    for (int trial = 0; trial < 25; ++trial) {
      Cyclotomic a = random_cyclo(rng, m);
      if (a.is_zero()) continue;
      Cyclotomic prod = a * a.inverse();
      CHECK(prod == q(1, 1, m));
    }
  }
}

TEST_CASE("conductor lifting commutes with arithmetic") {
  std::mt19937_64 rng(11);
  for (long long m : {3, 4, 8, 12}) {
    long long target = 24;
    for (int trial = 0; trial < 25; ++trial) {
      Cyclotomic a = random_cyclo(rng, m), b = random_cyclo(rng, m);
      CHECK((a + b).lift(target) == a.lift(target) + b.lift(target));
      CHECK((a * b).lift(target) == a.lift(target) * b.lift(target));
    }
  }
}

TEST_CASE("matrix arithmetic on the worked examples") {
  ExactMatrix i3 = ExactMatrix::identity(3);
  CHECK(mat_arith(i3, i3, MatOp::mul) == i3);

  // the discrete Fourier matrix at p = 3, inverted by exact elimination
  ExactMatrix f(3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.at(j, i) = Cyclotomic::zeta(3, (long long)i * j % 3);
  CHECK(f * mat_arith(f, f, MatOp::inv_of_a) == ExactMatrix::identity(3, 3));

  ExactMatrix i2 = ExactMatrix::identity(2);
  CHECK(mat_arith(i2, i2, MatOp::kronecker) == ExactMatrix::identity(4));

  ExactMatrix singular = ExactMatrix::from_integers(2, 2, {1, 2, 2, 4});
  CHECK_THROWS_WITH_AS(singular.inverse(), "not invertible", std::domain_error);
  ExactMatrix wrong = ExactMatrix::from_integers(2, 3, {1, 0, 0, 0, 1, 0});
  CHECK_THROWS_AS(i3 * wrong, std::invalid_argument);
}

TEST_CASE("canonical projective form") {
  ExactMatrix d2 = ExactMatrix::from_integers(3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 2});
  CHECK(canonical_projective(d2) == ExactMatrix::identity(3));

  // the p = 3 commutator P D P^-1 D^-1 = zeta I normalizes to the identity
  ExactMatrix p(3, 3, 3), d(3, 3, 3);
  for (int i = 0; i < 3; ++i) {
    p.at((i + 2) % 3, i) = Cyclotomic::from_rational(Rational(1), 3);
    d.at(i, i) = Cyclotomic::zeta(3, i);
  }
  ExactMatrix comm = p * d * p.inverse() * d.inverse();
  CHECK(comm == ExactMatrix::identity(3, 3).scaled(Cyclotomic::zeta(3)));
  CHECK(canonical_projective(comm) == ExactMatrix::identity(3, 3));

  ExactMatrix m = ExactMatrix::from_integers(2, 2, {0, 3, 1, 0});
  ExactMatrix expect =
      ExactMatrix::from_rationals(2, 2, {Rational(0), Rational(1), Rational(1, 3), Rational(0)});
  CHECK(canonical_projective(m) == expect);

  ExactMatrix zero(2, 2, 1ll);
  CHECK_THROWS_AS(canonical_projective(zero), std::domain_error);
}

TEST_CASE("canonical projective is idempotent and constant on scalar orbits") {
  std::mt19937_64 rng(23);
  ExactMatrix a(3, 3, 12);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = random_cyclo(rng, 12);
  ExactMatrix canon = canonical_projective(a);
  CHECK(canonical_projective(canon) == canon);
  int tested = 0;
  while (tested < 20) {
    Cyclotomic lambda = random_cyclo(rng, 12);
    if (lambda.is_zero()) continue;
    ++tested;
    CHECK(canonical_projective(a.scaled(lambda)) == canon);
  }
}

TEST_CASE("matrix multiplication is associative on random triples") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix a(3, 3, 12), b(3, 3, 12), c(3, 3, 12);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        a.at(r, col) = random_cyclo(rng, 12);
        b.at(r, col) = random_cyclo(rng, 12);
        c.at(r, col) = random_cyclo(rng, 12);
      }
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
