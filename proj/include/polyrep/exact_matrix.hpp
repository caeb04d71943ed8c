#pragma once

// Dense matrices over a cyclotomic field, one shared conductor per matrix.
// Inversion is exact Gaussian elimination pivoting on the first nonzero
// entry of each column, so results are deterministic.

#include <string>
#include <vector>

#include "polyrep/cyclotomic.hpp"

namespace polyrep {

class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0), conductor_(1) {}
  ExactMatrix(int rows, int cols, long long conductor);
  ExactMatrix(int rows, int cols, std::vector<Cyclotomic> entries);

  static ExactMatrix identity(int n, long long conductor = 1);
  static ExactMatrix from_rationals(int rows, int cols, const std::vector<Rational>& vals,
                                    long long conductor = 1);
  static ExactMatrix from_integers(int rows, int cols, const std::vector<long long>& vals,
                                   long long conductor = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long conductor() const { return conductor_; }

  const Cyclotomic& at(int r, int c) const { return entries_[(size_t)r * cols_ + c]; }
  Cyclotomic& at(int r, int c) { return entries_[(size_t)r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar() const;

  ExactMatrix lift(long long target) const;
  ExactMatrix scaled(const Cyclotomic& s) const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix inverse() const;   // throws std::domain_error("not invertible")
  ExactMatrix kronecker(const ExactMatrix& other) const;
  Cyclotomic determinant() const;

  // Exact power with an integer exponent (negative uses the inverse).
  ExactMatrix pow(long long e) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string encoding() const;
  std::string str() const;

private:
  int rows_, cols_;
  long long conductor_;
  std::vector<Cyclotomic> entries_;
};

// lambda*A with the first nonzero entry in row-major order scaled to 1;
// equal canonical forms exactly characterize scalar multiples.
ExactMatrix canonical_projective(const ExactMatrix& a);

// Rank over the cyclotomic field of a list of equal-shape matrices viewed
// as vectors (used for the span checks on P^a D^b).
int matrix_span_rank(const std::vector<ExactMatrix>& mats);

enum class MatOp { mul, inv_of_a, kronecker };
ExactMatrix mat_arith(const ExactMatrix& a, const ExactMatrix& b, MatOp kind);

}  // namespace polyrep
