#include "polyrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace polyrep {

long long euler_phi(long long m) {
  long long result = m;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<long long>;  // coefficient list, index = degree

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, 0);
  while (num.size() >= den.size()) {
    long long c = num.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
    if (num.empty()) break;
  }
  return q;
}

Poly cyclotomic_poly(long long m) {
  // x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long long d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

std::map<long long, std::shared_ptr<const CycloContext>>& context_cache() {
  static std::map<long long, std::shared_ptr<const CycloContext>> cache;
  return cache;
}
std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::shared_ptr<const CycloContext> CycloContext::get(long long conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(context_mutex());
  auto& cache = context_cache();
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;

  auto ctx = std::make_shared<CycloContext>();
  ctx->conductor = conductor;
  ctx->phi = euler_phi(conductor);
  ctx->min_poly = cyclotomic_poly(conductor);

  long long phi = ctx->phi;
  long long maxpow = std::max<long long>(conductor, 2 * phi - 1);
  ctx->power_basis.assign(maxpow, std::vector<long long>(phi, 0));
  for (long long k = 0; k < std::min(phi, maxpow); ++k) ctx->power_basis[k][k] = 1;
  for (long long k = phi; k < maxpow; ++k) {
    // z^k = z * z^(k-1), then fold the overflow term through the minimal
    // polynomial: z^phi = -(min_poly[0] + ... + min_poly[phi-1] z^(phi-1)).
    const auto& prev = ctx->power_basis[k - 1];
    auto& cur = ctx->power_basis[k];
    long long top = prev[phi - 1];
    for (long long j = phi - 1; j > 0; --j) cur[j] = prev[j - 1] - top * ctx->min_poly[j];
    cur[0] = -top * ctx->min_poly[0];
  }

  cache.emplace(conductor, ctx);
  return ctx;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, long long conductor) {
  auto ctx = CycloContext::get(conductor);
  std::vector<Rational> c(ctx->phi, Rational(0));
  c[0] = r;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::zeta(long long conductor, long long power) {
  auto ctx = CycloContext::get(conductor);
  power %= conductor;
  if (power < 0) power += conductor;
  std::vector<Rational> c(ctx->phi, Rational(0));
  const auto& row = ctx->power_basis[power];
  for (long long j = 0; j < ctx->phi; ++j) c[j] = Rational(row[j]);
  return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("value is not rational");
  return coeffs_[0];
}

void Cyclotomic::check_same_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("conductor mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check_same_conductor(a, b);
  auto c = a.coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return Cyclotomic(a.conductor_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check_same_conductor(a, b);
  auto c = a.coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return Cyclotomic(a.conductor_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check_same_conductor(a, b);
  auto ctx = CycloContext::get(a.conductor_);
  long long phi = ctx->phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (long long i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long long j = 0; j < phi; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (long long k = 0; k < phi; ++k) out[k] = conv[k];
  for (long long k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    const auto& row = ctx->power_basis[k];
    for (long long j = 0; j < phi; ++j)
      if (row[j] != 0) out[j] += conv[k] * Rational(row[j]);
  }
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return from_rational(coeffs_[0].inverse(), conductor_);
  auto ctx = CycloContext::get(conductor_);
  long long phi = ctx->phi;

  // Solve M x = e_0 where M is multiplication by this value in the power
  // basis; coefficient growth stays polynomial, unlike the Euclidean
  // remainder sequence.
  std::vector<std::vector<Rational>> m((size_t)phi, std::vector<Rational>((size_t)phi + 1));
  for (long long j = 0; j < phi; ++j) {
    Cyclotomic col = *this * zeta(conductor_, j);
    for (long long r = 0; r < phi; ++r) m[r][j] = col.coeffs_[r];
  }
  m[0][phi] = Rational(1);

  for (long long col = 0; col < phi; ++col) {
    long long pivot = -1;
    for (long long r = col; r < phi; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("multiplication matrix is singular");
    std::swap(m[col], m[pivot]);
    Rational pinv = m[col][col].inverse();
    for (long long c = col; c <= phi; ++c) m[col][c] *= pinv;
    for (long long r = 0; r < phi; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (long long c = col; c <= phi; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> out((size_t)phi);
  for (long long r = 0; r < phi; ++r) out[r] = m[r][phi];
  return Cyclotomic(conductor_, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::lift(long long target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0)
    throw std::invalid_argument("conductor does not divide lift target");
  auto ctx = CycloContext::get(target);
  long long step = target / conductor_;
  std::vector<Rational> out(ctx->phi, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& row = ctx->power_basis[(long long)k * step % target];
    for (long long j = 0; j < ctx->phi; ++j)
      if (row[j] != 0) out[j] += coeffs_[k] * Rational(row[j]);
  }
  return Cyclotomic(target, std::move(out));
}

Cyclotomic Cyclotomic::galois(long long a) const {
  a %= conductor_;
  if (a < 0) a += conductor_;
  if (std::gcd(a, conductor_) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  auto ctx = CycloContext::get(conductor_);
  std::vector<Rational> out(ctx->phi, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& row = ctx->power_basis[(long long)k * a % conductor_];
    for (long long j = 0; j < ctx->phi; ++j)
      if (row[j] != 0) out[j] += coeffs_[k] * Rational(row[j]);
  }
  return Cyclotomic(conductor_, std::move(out));
}

void Cyclotomic::append_encoding(std::string& out) const {
  auto push64 = [&out](long long v) {
    for (int i = 0; i < 8; ++i) out.push_back((char)((unsigned long long)v >> (8 * i) & 0xff));
  };
  for (const auto& c : coeffs_) {
    push64(c.num());
    push64(c.den());
  }
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::string s;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[k].str();
    if (k == 1) s += "*z";
    if (k > 1) s += "*z^" + std::to_string(k);
  }
  if (s.empty()) s = "0";
  return s + " (z = zeta_" + std::to_string(conductor_) + ")";
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp kind) {
  switch (kind) {
    case CycloOp::add: return a + b;
    case CycloOp::mul: return a * b;
    case CycloOp::inv_of_a: return a.inverse();
  }
  throw std::logic_error("unreachable");
}

}  // namespace polyrep
