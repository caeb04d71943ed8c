#include "polyrep/exact_matrix.hpp"

#include <stdexcept>

namespace polyrep {

ExactMatrix::ExactMatrix(int rows, int cols, long long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      entries_((size_t)rows * cols, Cyclotomic::from_rational(Rational(0), conductor)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix shape must be positive");
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), conductor_(1), entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix shape must be positive");
  if (entries_.size() != (size_t)rows * cols)
    throw std::invalid_argument("entry count does not match shape");
  conductor_ = entries_[0].conductor();
  for (const auto& e : entries_)
    if (e.conductor() != conductor_) throw std::invalid_argument("conductor mismatch");
}

ExactMatrix ExactMatrix::identity(int n, long long conductor) {
  ExactMatrix m(n, n, conductor);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::from_rational(Rational(1), conductor);
  return m;
}

ExactMatrix ExactMatrix::from_rationals(int rows, int cols, const std::vector<Rational>& vals,
                                        long long conductor) {
  ExactMatrix m(rows, cols, conductor);
  if (vals.size() != (size_t)rows * cols)
    throw std::invalid_argument("entry count does not match shape");
  for (size_t i = 0; i < vals.size(); ++i)
    m.entries_[i] = Cyclotomic::from_rational(vals[i], conductor);
  return m;
}

ExactMatrix ExactMatrix::from_integers(int rows, int cols, const std::vector<long long>& vals,
                                       long long conductor) {
  std::vector<Rational> r(vals.begin(), vals.end());
  return from_rationals(rows, cols, r, conductor);
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const auto& e = at(r, c);
      if (r == c) {
        if (!e.is_rational() || !e.rational_value().is_one()) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  return true;
}

bool ExactMatrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (r == c && at(r, c) != at(0, 0)) return false;
      if (r != c && !at(r, c).is_zero()) return false;
    }
  return true;
}

ExactMatrix ExactMatrix::lift(long long target) const {
  std::vector<Cyclotomic> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x.lift(target));
  return ExactMatrix(rows_, cols_, std::move(e));
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
  std::vector<Cyclotomic> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x * s);
  return ExactMatrix(rows_, cols_, std::move(e));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_, conductor_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("conductor mismatch");
  ExactMatrix out(a.rows_, b.cols_, a.conductor_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        out.at(r, c) = out.at(r, c) + ark * b.at(k, c);
      }
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("conductor mismatch");
  ExactMatrix out(a.rows_, a.cols_, a.conductor_);
  for (size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("shape mismatch");
  int n = rows_;
  ExactMatrix work = *this;
  ExactMatrix inv = identity(n, conductor_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("not invertible");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Cyclotomic pinv = work.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      work.at(col, c) = work.at(col, c) * pinv;
      inv.at(col, c) = inv.at(col, c) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Cyclotomic f = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        work.at(r, c) = work.at(r, c) - f * work.at(col, c);
        inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::kronecker(const ExactMatrix& other) const {
  if (conductor_ != other.conductor_) throw std::invalid_argument("conductor mismatch");
  ExactMatrix out(rows_ * other.rows_, cols_ * other.cols_, conductor_);
  for (int r1 = 0; r1 < rows_; ++r1)
    for (int c1 = 0; c1 < cols_; ++c1) {
      if (at(r1, c1).is_zero()) continue;
      for (int r2 = 0; r2 < other.rows_; ++r2)
        for (int c2 = 0; c2 < other.cols_; ++c2)
          out.at(r1 * other.rows_ + r2, c1 * other.cols_ + c2) = at(r1, c1) * other.at(r2, c2);
    }
  return out;
}

Cyclotomic ExactMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("shape mismatch");
  int n = rows_;
  ExactMatrix work = *this;
  Cyclotomic det = Cyclotomic::from_rational(Rational(1), conductor_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Cyclotomic::from_rational(Rational(0), conductor_);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = -det;
    }
    det = det * work.at(col, col);
    Cyclotomic pinv = work.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      Cyclotomic f = work.at(r, col) * pinv;
      for (int c = col; c < n; ++c) work.at(r, c) = work.at(r, c) - f * work.at(col, c);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::pow(long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("shape mismatch");
  ExactMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? (unsigned long long)(-e) : (unsigned long long)e;
  ExactMatrix acc = identity(rows_, conductor_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ &&
         a.entries_ == b.entries_;
}

std::string ExactMatrix::encoding() const {
  std::string out;
  out.reserve(entries_.size() * 16 + 16);
  auto push32 = [&out](long long v) {
    for (int i = 0; i < 4; ++i) out.push_back((char)((unsigned long long)v >> (8 * i) & 0xff));
  };
  push32(rows_);
  push32(cols_);
  push32(conductor_);
  for (const auto& e : entries_) e.append_encoding(out);
  return out;
}

std::string ExactMatrix::str() const {
  std::string s = "[";
  for (int r = 0; r < rows_; ++r) {
    s += "[";
    for (int c = 0; c < cols_; ++c) {
      s += at(r, c).str();
      if (c + 1 < cols_) s += ", ";
    }
    s += r + 1 < rows_ ? "], " : "]";
  }
  return s + "]";
}

ExactMatrix canonical_projective(const ExactMatrix& a) {
  for (size_t i = 0; i < (size_t)a.rows() * a.cols(); ++i) {
    const Cyclotomic& e = a.at((int)(i / a.cols()), (int)(i % a.cols()));
    if (!e.is_zero()) return a.scaled(e.inverse());
  }
  throw std::domain_error("zero matrix has no projective canonical form");
}

int matrix_span_rank(const std::vector<ExactMatrix>& mats) {
  if (mats.empty()) return 0;
  size_t dim = (size_t)mats[0].rows() * mats[0].cols();
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& m : mats) {
    std::vector<Cyclotomic> v;
    v.reserve(dim);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    // reduce against existing pivot rows
    for (const auto& prev : rows) {
      size_t p = 0;
      while (p < dim && prev[p].is_zero()) ++p;
      if (p == dim || v[p].is_zero()) continue;
      Cyclotomic f = v[p] * prev[p].inverse();
      for (size_t j = p; j < dim; ++j) v[j] = v[j] - f * prev[j];
    }
    bool nonzero = false;
    for (const auto& x : v)
      if (!x.is_zero()) { nonzero = true; break; }
    if (nonzero) rows.push_back(std::move(v));
  }
  return (int)rows.size();
}

ExactMatrix mat_arith(const ExactMatrix& a, const ExactMatrix& b, MatOp kind) {
  switch (kind) {
    case MatOp::mul: return a * b;
    case MatOp::inv_of_a: return a.inverse();
    case MatOp::kronecker: return a.kronecker(b);
  }
  throw std::logic_error("unreachable");
}

}  // namespace polyrep
