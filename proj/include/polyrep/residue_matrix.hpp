#pragma once

// Square/rectangular matrices over Z/mZ with entries reduced to [0, m).
// Inversion goes through the adjugate, so it works over any residue ring
// as long as the determinant is a unit.

#include <string>
#include <vector>

namespace polyrep {

class ResidueMatrix {
public:
  ResidueMatrix() : modulus_(1), rows_(0), cols_(0) {}
  ResidueMatrix(int modulus, int rows, int cols, std::vector<long long> entries);

  static ResidueMatrix identity(int modulus, int n);

  int modulus() const { return modulus_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return entries_[(size_t)r * cols_ + c]; }

  bool is_identity() const;
  int determinant() const;      // reduced to [0, m)
  bool is_invertible() const;   // determinant a unit mod m

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  ResidueMatrix inverse() const;  // throws std::domain_error("not invertible")

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b);
  friend bool operator!=(const ResidueMatrix& a, const ResidueMatrix& b) { return !(a == b); }

  std::string encoding() const;
  std::string str() const;

private:
  int modulus_, rows_, cols_;
  std::vector<int> entries_;
};

}  // namespace polyrep
