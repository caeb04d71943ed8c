#include "polyrep/residue_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace polyrep {

namespace {

int mod_reduce(long long v, int m) {
  long long r = v % m;
  if (r < 0) r += m;
  return (int)r;
}

int unit_inverse(int a, int m) {
  // extended Euclid
  int t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible");
  return mod_reduce(t, m);
}

}  // namespace

ResidueMatrix::ResidueMatrix(int modulus, int rows, int cols, std::vector<long long> entries)
    : modulus_(modulus), rows_(rows), cols_(cols) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix shape must be positive");
  if (entries.size() != (size_t)rows * cols)
    throw std::invalid_argument("entry count does not match shape");
  entries_.resize(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) entries_[i] = mod_reduce(entries[i], modulus);
}

ResidueMatrix ResidueMatrix::identity(int modulus, int n) {
  std::vector<long long> e((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) e[(size_t)i * n + i] = 1;
  return ResidueMatrix(modulus, n, n, std::move(e));
}

bool ResidueMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 % modulus_ : 0)) return false;
  return true;
}

namespace {

// Cofactor-expansion determinant; matrices here are at most 4x4.
long long det_rec(const std::vector<long long>& m, int n) {
  if (n == 1) return m[0];
  long long sum = 0;
  std::vector<long long> minor((size_t)(n - 1) * (n - 1));
  for (int c = 0; c < n; ++c) {
    for (int r = 1; r < n; ++r) {
      int k = 0;
      for (int cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor[(size_t)(r - 1) * (n - 1) + k++] = m[(size_t)r * n + cc];
      }
    }
    long long term = m[c] * det_rec(minor, n - 1);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

int ResidueMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("shape mismatch");
  if (rows_ > 4) throw std::invalid_argument("determinant supported up to 4x4");
  std::vector<long long> m(entries_.begin(), entries_.end());
  return mod_reduce(det_rec(m, rows_), modulus_);
}

bool ResidueMatrix::is_invertible() const {
  return std::gcd(determinant(), modulus_) == 1;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("modulus mismatch");
  std::vector<long long> out((size_t)a.rows_ * b.cols_, 0);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < b.cols_; ++c)
        out[(size_t)r * b.cols_ + c] += (long long)a.at(r, k) * b.at(k, c);
    }
  return ResidueMatrix(a.modulus_, a.rows_, b.cols_, std::move(out));
}

ResidueMatrix ResidueMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("shape mismatch");
  int n = rows_;
  int d = determinant();
  int dinv = unit_inverse(d, modulus_);  // throws when det is not a unit
  std::vector<long long> adj((size_t)n * n);
  std::vector<long long> minor((size_t)(n - 1) * (n - 1));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (n == 1) {
        adj[0] = 1;
        continue;
      }
      int k = 0;
      for (int rr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        for (int cc = 0; cc < n; ++cc) {
          if (cc == c) continue;
          minor[k++] = at(rr, cc);
        }
      }
      long long cof = det_rec(minor, n - 1);
      if ((r + c) % 2 == 1) cof = -cof;
      adj[(size_t)c * n + r] = cof * dinv;  // adjugate is the cofactor transpose
    }
  return ResidueMatrix(modulus_, n, n, std::move(adj));
}

bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
  return a.modulus_ == b.modulus_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string ResidueMatrix::encoding() const {
  std::string out;
  auto push32 = [&out](int v) {
    for (int i = 0; i < 4; ++i) out.push_back((char)((unsigned)v >> (8 * i) & 0xff));
  };
  push32(modulus_);
  push32(rows_);
  push32(cols_);
  for (int e : entries_) push32(e);
  return out;
}

std::string ResidueMatrix::str() const {
  std::string s = "[";
  for (int r = 0; r < rows_; ++r) {
    s += "[";
    for (int c = 0; c < cols_; ++c) {
      s += std::to_string(at(r, c));
      if (c + 1 < cols_) s += ",";
    }
    s += r + 1 < rows_ ? "]," : "]";
  }
  return s + "] mod " + std::to_string(modulus_);
}

}  // namespace polyrep
