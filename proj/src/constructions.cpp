#include "polyrep/constructions.hpp"

#include <map>

#include "polyrep/laws.hpp"

namespace polyrep {

namespace {

GroupPtr perm_group(int degree, std::vector<std::vector<int>> gens, const std::string& label) {
  PermutationLaw law{degree};
  ClosureOptions opt;
  opt.label = label;
  return close_group(law, std::move(gens), opt).group;
}

}  // namespace

GroupPtr cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<std::vector<int>> gens;
  if (n > 1) gens.push_back(cycle);
  return perm_group(n, std::move(gens), "C" + std::to_string(n));
}

GroupPtr symmetric3() {
  static GroupPtr g = perm_group(3, {{1, 2, 0}, {1, 0, 2}}, "S3");
  return g;
}

GroupPtr alternating4() {
  static GroupPtr g = perm_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "A4");
  return g;
}

GroupPtr symmetric4() {
  static GroupPtr g = perm_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4");
  return g;
}

GroupPtr alternating5() {
  static GroupPtr g = perm_group(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5");
  return g;
}

GroupPtr quaternion8() {
  ExactMatrixLaw law{2, 4};
  Cyclotomic i4 = Cyclotomic::zeta(4);
  Cyclotomic one = Cyclotomic::from_rational(Rational(1), 4);
  Cyclotomic zero = Cyclotomic::from_rational(Rational(0), 4);
  ExactMatrix mi(2, 2, {i4, zero, zero, -i4});
  ExactMatrix mj(2, 2, {zero, one, -one, zero});
  ClosureOptions opt;
  opt.label = "Q8";
  static GroupPtr g = close_group(law, {mi, mj}, opt).group;
  return g;
}

GroupPtr klein_four() { return elementary_vector_group(2, 2); }

GroupPtr elementary_vector_group(int modulus, int rank) {
  ResidueVectorLaw law{modulus, rank};
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  ClosureOptions opt;
  opt.label = "(Z/" + std::to_string(modulus) + ")^" + std::to_string(rank);
  return close_group(law, std::move(gens), opt).group;
}

ClosureResult<ResidueMatrixLaw> sl2_mod_closure(int m) {
  ResidueMatrixLaw law{2, m};
  ResidueMatrix e12(m, 2, 2, {1, 1, 0, 1});
  ResidueMatrix e21(m, 2, 2, {1, 0, 1, 1});
  ClosureOptions opt;
  opt.label = "SL2(Z/" + std::to_string(m) + ")";
  return close_group(law, {e12, e21}, opt);
}

ClosureResult<ResidueMatrixLaw> gl2_mod_closure(int m) {
  ResidueMatrixLaw law{2, m};
  ResidueMatrix e12(m, 2, 2, {1, 1, 0, 1});
  ResidueMatrix e21(m, 2, 2, {1, 0, 1, 1});
  ResidueMatrix t(m, 2, 2, {1, 0, 0, m - 1});
  ClosureOptions opt;
  opt.label = "GL2(Z/" + std::to_string(m) + ")";
  return close_group(law, {e12, e21, t}, opt);
}

GroupPtr sl2_mod(int m) { return sl2_mod_closure(m).group; }
GroupPtr gl2_mod(int m) { return gl2_mod_closure(m).group; }

GroupPtr binary_octahedral() {
  ExactMatrixLaw law{2, 8};
  auto frac = [](long long n, long long d) { return Cyclotomic::from_rational(Rational(n, d), 8); };
  Cyclotomic i8 = Cyclotomic::zeta(8, 2);  // i
  Cyclotomic half = frac(1, 2);
  Cyclotomic zero = frac(0, 1), one = frac(1, 1);
  // quaternion q = a+bi+cj+dk as [[a+bi, c+di], [-c+di, a-bi]]
  ExactMatrix omega(2, 2,
                    {(i8 - one) * half, (i8 + one) * half, (i8 - one) * half, (-i8 - one) * half});
  ExactMatrix mj(2, 2, {zero, one, -one, zero});
  ExactMatrix s(2, 2, {Cyclotomic::zeta(8, 1), zero, zero, Cyclotomic::zeta(8, 7)});
  ClosureOptions opt;
  opt.label = "binary octahedral";
  auto res = close_group(law, {omega, mj, s}, opt);
  if (res.group->order() != 48) throw std::logic_error("binary octahedral closure is not 48");
  return res.group;
}

// ---- Heisenberg ---------------------------------------------------------

HeisenbergData heisenberg_verify(int p, bool allow_large) {
  bool prime = p > 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  long long image_expected = (long long)p * p * p * ((long long)p * p - 1);
  if (image_expected > 10000 && !allow_large)
    throw std::runtime_error("image order " + std::to_string(image_expected) +
                             " exceeds the fast-path guard; rerun with the large-group flag");

  HeisenbergData data;
  data.p = p;
  auto zeta = [p](long long e) {
    long long r = e % p;
    if (r < 0) r += p;
    return Cyclotomic::zeta(p, r);
  };
  Cyclotomic zero = Cyclotomic::from_rational(Rational(0), p);

  ExactMatrix P(p, p, (long long)p), D(p, p, (long long)p), F(p, p, (long long)p),
      V(p, p, (long long)p);
  for (int i = 0; i < p; ++i) {
    P.at(((i - 1) % p + p) % p, i) = zeta(0);
    D.at(i, i) = zeta(i);
    for (int j = 0; j < p; ++j) {
      F.at(j, i) = zeta((long long)i * j);
      long long u = i - j;
      V.at(j, i) = zeta(-u * (u + 1) / 2);  // v(i,j) = (i-j)(j-i-1)/2
    }
  }
  data.P = P;
  data.D = D;
  data.F = F;
  data.V = V;

  ExactMatrix I = ExactMatrix::identity(p, p);
  ExactMatrix Finv = F.inverse(), Vinv = V.inverse(), Pinv = P.inverse(), Dinv = D.inverse();
  ExactMatrix zetaI = I.scaled(zeta(1));
  data.relations_ok = P.pow(p) == I && D.pow(p) == I && P * D * Pinv * Dinv == zetaI &&
                      F * P * Finv == Dinv && F * D * Finv == P && V * P * Vinv == P &&
                      V * D * Vinv == D * P;
  if (!data.relations_ok) throw std::logic_error("Heisenberg matrix relations failed");

  std::vector<ExactMatrix> basis;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) basis.push_back(P.pow(a) * D.pow(b));
  data.span_ok = matrix_span_rank(basis) == p * p;
  if (!data.span_ok) throw std::logic_error("P^a D^b do not span the matrix algebra");

  // conjugation action on N in the (P, D) coordinates
  auto locate = [&](const ExactMatrix& conj) {
    ExactMatrix canon = canonical_projective(conj);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        if (canonical_projective(P.pow(a) * D.pow(b)) == canon) return std::array<int, 2>{a, b};
    throw std::logic_error("conjugate is not of the form P^a D^b");
  };
  auto fp = locate(F * P * Finv), fd = locate(F * D * Finv);
  auto vp = locate(V * P * Vinv), vd = locate(V * D * Vinv);
  data.rho_f = {{{fp[0], fd[0]}, {fp[1], fd[1]}}};
  data.rho_v = {{{vp[0], vd[0]}, {vp[1], vd[1]}}};
  data.rho_matches_paper = data.rho_f == std::array<std::array<int, 2>, 2>{{{0, 1}, {p - 1, 0}}} &&
                           data.rho_v == std::array<std::array<int, 2>, 2>{{{1, 1}, {0, 1}}};
  if (!data.rho_matches_paper) throw std::logic_error("conjugation images differ from rho(F), rho(V)");

  ProjectiveMatrixLaw plaw{p, p};
  ClosureOptions opt;
  opt.cap = (size_t)image_expected + 16;
  opt.label = "Heisenberg image (p=" + std::to_string(p) + ")";
  auto res = close_group(
      plaw,
      {canonical_projective(P), canonical_projective(D), canonical_projective(V),
       canonical_projective(F)},
      opt);
  data.image = res.group;
  data.image_order = res.group->order();
  if (data.image_order != image_expected)
    throw std::logic_error("projective image order differs from p^2 |SL2(F_p)|");

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < (int)res.elements.size(); ++i)
    index.emplace(res.elements[i].encoding(), i);
  int pid = index.at(canonical_projective(P).encoding());
  int did = index.at(canonical_projective(D).encoding());
  data.image_n = make_subgroup(data.image, {pid, did}, "(C_p)^2");
  if ((long long)data.image_n.member_set.size() != (long long)p * p)
    throw std::logic_error("projective <P, D> does not have order p^2");
  return data;
}

// ---- torus point orders -------------------------------------------------

int torus_point_order(TorusForm form, const Rational& x, const Rational& y) {
  ExactMatrix m(1, 1, 1ll);
  switch (form) {
    case TorusForm::split:
      if (!y.is_zero()) throw std::domain_error("point is not on the torus");
      if (x.is_zero()) throw std::domain_error("point is not on the torus");
      m = ExactMatrix::from_rationals(1, 1, {x});
      break;
    case TorusForm::circle:
      if (x * x + y * y != Rational(1)) throw std::domain_error("point is not on the curve");
      m = ExactMatrix::from_rationals(2, 2, {x, -y, y, x});
      break;
    case TorusForm::x2_plus_3y2:
      if (x * x + Rational(3) * y * y != Rational(1))
        throw std::domain_error("point is not on the curve");
      m = ExactMatrix::from_rationals(2, 2, {x, Rational(-3) * y, y, x});
      break;
  }
  ExactMatrix acc = m;
  int ord = 1;
  while (!acc.is_identity()) {
    acc = acc * m;
    if (++ord > 10000) throw std::runtime_error("point order exceeds 10^4 (not torsion?)");
  }
  return ord;
}

// ---- monomial map psi ----------------------------------------------------

namespace {
// ratio coordinates lambda_i / lambda_j, fixed ordering
constexpr std::array<std::pair<int, int>, 6> kRatioPairs = {
    {{0, 2}, {1, 2}, {0, 1}, {2, 1}, {1, 0}, {2, 0}}};

int ratio_index(int i, int j) {
  for (int k = 0; k < 6; ++k)
    if (kRatioPairs[k].first == i && kRatioPairs[k].second == j) return k;
  throw std::logic_error("bad ratio pair");
}
}  // namespace

ExactMatrix monomial_matrix(const std::array<Cyclotomic, 3>& diag,
                            const std::array<int, 3>& perm) {
  for (const auto& d : diag)
    if (d.is_zero()) throw std::domain_error("zero scalar in monomial matrix");
  long long conductor = diag[0].conductor();
  ExactMatrix m(3, 3, conductor);
  for (int j = 0; j < 3; ++j) m.at(perm[j], j) = diag[j];
  return m;
}

ExactMatrix monomial_psi(const ExactMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("psi expects a 3x3 matrix");
  std::array<int, 3> perm{-1, -1, -1};
  std::array<Cyclotomic, 3> lambda;
  for (int j = 0; j < 3; ++j) {
    for (int r = 0; r < 3; ++r) {
      if (a.at(r, j).is_zero()) continue;
      if (perm[j] >= 0) throw std::invalid_argument("matrix is not monomial");
      perm[j] = r;
      lambda[j] = a.at(r, j);
    }
    if (perm[j] < 0) throw std::domain_error("zero column: matrix is not monomial");
  }
  if (perm[0] == perm[1] || perm[0] == perm[2] || perm[1] == perm[2])
    throw std::invalid_argument("matrix is not monomial");

  ExactMatrix out(6, 6, a.conductor());
  for (int c = 0; c < 6; ++c) {
    auto [i, j] = kRatioPairs[c];
    int r = ratio_index(perm[i], perm[j]);
    out.at(r, c) = lambda[i] * lambda[j].inverse();
  }
  return out;
}

// ---- weighted projective maps phi_n ---------------------------------------

ExactMatrix symmetric_square(const ExactMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("symmetric square expects 2x2");
  const Cyclotomic &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  Cyclotomic two = Cyclotomic::from_rational(Rational(2), m.conductor());
  return ExactMatrix(3, 3,
                     {a * a, a * b, b * b, two * a * c, a * d + b * c, two * b * d, c * c, c * d,
                      d * d});
}

namespace {
Cyclotomic cyclo_pow(Cyclotomic base, long long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyclotomic acc = Cyclotomic::from_rational(Rational(1), base.conductor());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}
}  // namespace

ExactMatrix wps_phi(int n, int m, const ExactMatrix& a, const ExactMatrix& b) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("A must be 2x2");
  if (b.rows() != m || b.cols() != m) throw std::invalid_argument("B must be m x m");
  if (a.conductor() != b.conductor()) throw std::invalid_argument("conductor mismatch");
  Cyclotomic det = a.determinant();
  if (det.is_zero()) throw std::domain_error("not invertible");
  if (b.determinant().is_zero()) throw std::domain_error("not invertible");
  if (n % 2 == 1) {
    Cyclotomic scale = cyclo_pow(det, (-(long long)n - 1) / 2);
    return a.kronecker(b).scaled(scale);
  }
  Cyclotomic scale = cyclo_pow(det, -(long long)n / 2 - 1);
  return symmetric_square(a).kronecker(b).scaled(scale);
}

}  // namespace polyrep
