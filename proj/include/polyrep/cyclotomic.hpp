#pragma once

// Elements of the m-th cyclotomic field with exact rational coefficients.
//
// A value of conductor m is the unique reduced residue modulo the m-th
// cyclotomic polynomial, stored as phi(m) coefficients of 1, z, ...,
// z^(phi(m)-1).  Canonical form makes equality coefficientwise, which is
// what the group-closure hot path needs.

#include <memory>
#include <string>
#include <vector>

#include "polyrep/rational.hpp"

namespace polyrep {

long long euler_phi(long long m);

// Per-conductor tables: the cyclotomic polynomial and the expansion of
// every power z^k, 0 <= k < max(m, 2*phi-1), in the canonical basis.
struct CycloContext {
  long long conductor = 1;
  long long phi = 1;
  std::vector<long long> min_poly;                 // monic, degree phi
  std::vector<std::vector<long long>> power_basis; // z^k -> phi coefficients

  static std::shared_ptr<const CycloContext> get(long long conductor);
};

class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

  static Cyclotomic from_rational(const Rational& r, long long conductor = 1);
  // z_m^k
  static Cyclotomic zeta(long long conductor, long long power = 1);

  long long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Rewrites the value at conductor target (current conductor must divide it).
  Cyclotomic lift(long long target) const;
  // Galois substitution z -> z^a, gcd(a, conductor) = 1.
  Cyclotomic galois(long long a) const;
  Cyclotomic conj() const { return galois(conductor_ == 1 ? 1 : conductor_ - 1); }

  void append_encoding(std::string& out) const;
  std::string str() const;

private:
  Cyclotomic(long long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  static void check_same_conductor(const Cyclotomic& a, const Cyclotomic& b);

  long long conductor_;
  std::vector<Rational> coeffs_;
};

// Scalar entry points with the documented error semantics.
enum class CycloOp { add, mul, inv_of_a };
Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp kind);

}  // namespace polyrep
