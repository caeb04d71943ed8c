#include "polyrep/chartab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace polyrep {

namespace {

using u64 = unsigned long long;

u64 mod_pow(u64 b, u64 e, u64 q) {
  u64 r = 1 % q;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 q) { return mod_pow(a % q, q - 2, q); }

long long pick_dixon_prime(long long exponent, long long order) {
  for (long long q = exponent + 1;; q += exponent) {
    if (q > 1000000) throw std::runtime_error("no Dixon prime below 10^6");
    if ((double)q * q <= 4.0 * (double)order) continue;
    if (order % q == 0) continue;
    bool prime = q > 1;
    for (long long d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        prime = false;
        break;
      }
    if (prime) return q;
  }
}

u64 primitive_root(u64 q) {
  std::vector<u64> factors;
  u64 phi = q - 1, rest = phi;
  for (u64 p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      factors.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) factors.push_back(rest);
  for (u64 g = 2; g < q; ++g) {
    bool ok = true;
    for (u64 p : factors)
      if (mod_pow(g, phi / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using Mat = std::vector<std::vector<u64>>;

// Characteristic polynomial over F_q via Hessenberg reduction; returns
// monic coefficients c[0..d] with p(x) = sum c[i] x^i.
std::vector<u64> charpoly(Mat h, u64 q) {
  int d = (int)h.size();
  for (int col = 0; col + 2 < d; ++col) {
    int pivot = -1;
    for (int r = col + 1; r < d; ++r)
      if (h[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != col + 1) {
      std::swap(h[pivot], h[col + 1]);
      for (int r = 0; r < d; ++r) std::swap(h[r][pivot], h[r][col + 1]);
    }
    u64 pinv = mod_inv(h[col + 1][col], q);
    for (int r = col + 2; r < d; ++r) {
      if (h[r][col] == 0) continue;
      u64 f = h[r][col] * pinv % q;
      for (int c = 0; c < d; ++c) h[r][c] = (h[r][c] + (q - f) * h[col + 1][c]) % q;
      for (int rr = 0; rr < d; ++rr) h[rr][col + 1] = (h[rr][col + 1] + f * h[rr][r]) % q;
    }
  }
  // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_j h[j-1][k-1] (prod subdiag) p_{j-1}
  std::vector<std::vector<u64>> p(d + 1);
  p[0] = {1};
  for (int k = 1; k <= d; ++k) {
    p[k].assign(k + 1, 0);
    for (int i = 0; i < k; ++i) {
      p[k][i + 1] = (p[k][i + 1] + p[k - 1][i]) % q;
      p[k][i] = (p[k][i] + (q - h[k - 1][k - 1] % q) * p[k - 1][i]) % q;
    }
    u64 prod = 1;
    for (int j = k - 1; j >= 1; --j) {
      prod = prod * h[j][j - 1] % q;
      u64 coeff = h[j - 1][k - 1] * prod % q;
      if (coeff == 0) continue;
      for (int i = 0; i < j; ++i)
        p[k][i] = (p[k][i] + (q - coeff) * p[j - 1][i]) % q;
    }
  }
  return p[d];
}

u64 poly_eval(const std::vector<u64>& c, u64 x, u64 q) {
  u64 r = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) r = (r * x + c[i]) % q;
  return r;
}

// Kernel basis of m, columns in reduced echelon form.
Mat kernel_basis(Mat m, u64 q) {
  int rows = (int)m.size(), cols = (int)m[0].size();
  std::vector<int> pivot_col_of_row(rows, -1), pivot_row_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    u64 pinv = mod_inv(m[rank][c], q);
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * pinv % q;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      u64 f = m[r][c];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] = (m[r][cc] + (q - f) * m[rank][cc]) % q;
    }
    pivot_col_of_row[rank] = c;
    pivot_row_of_col[c] = rank;
    ++rank;
  }
  Mat basis;  // one column per free variable
  for (int c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    std::vector<u64> v(cols, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) {
      int pc = pivot_col_of_row[r];
      v[pc] = (q - m[r][c] % q) % q;
    }
    basis.push_back(std::move(v));
  }
  // transpose into column-major: basis is currently one vector per column
  Mat out(cols, std::vector<u64>(basis.size(), 0));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < cols; ++i) out[i][j] = basis[j][i];
  return out;
}

struct EchelonSpace {
  Mat cols;                // k x d, reduced column echelon
  std::vector<int> pivots; // pivot row of each column
};

EchelonSpace echelonize_columns(Mat m, u64 q) {
  int rows = (int)m.size();
  int cols = m.empty() ? 0 : (int)m[0].size();
  EchelonSpace out;
  out.cols.assign(rows, {});
  std::vector<std::vector<u64>> basis;  // row-major storage of the columns
  std::vector<int> pivots;
  for (int c = 0; c < cols; ++c) {
    std::vector<u64> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = m[r][c];
    for (size_t b = 0; b < basis.size(); ++b) {
      u64 f = v[pivots[b]];
      if (f == 0) continue;
      for (int r = 0; r < rows; ++r) v[r] = (v[r] + (q - f) * basis[b][r]) % q;
    }
    int p = -1;
    for (int r = 0; r < rows; ++r)
      if (v[r] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    u64 pinv = mod_inv(v[p], q);
    for (int r = 0; r < rows; ++r) v[r] = v[r] * pinv % q;
    for (size_t b = 0; b < basis.size(); ++b) {
      u64 f = basis[b][p];
      if (f == 0) continue;
      for (int r = 0; r < rows; ++r) basis[b][r] = (basis[b][r] + (q - f) * v[r]) % q;
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
  }
  // keep deterministic column order: sort by pivot row
  std::vector<int> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pivots[a] < pivots[b]; });
  out.cols.assign(rows, std::vector<u64>(basis.size(), 0));
  for (size_t j = 0; j < idx.size(); ++j) {
    for (int r = 0; r < rows; ++r) out.cols[r][j] = basis[idx[j]][r];
    out.pivots.push_back(pivots[idx[j]]);
  }
  return out;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g) {
  if (g->order() > 10000) throw std::runtime_error("character_table cap exceeded (order > 10^4)");
  const auto& cc = g->classes();
  int k = (int)cc.members.size();
  if (k > 512) throw std::runtime_error("character_table cap exceeded (more than 512 classes)");
  int n = g->order();

  CharacterTable table;
  table.group = g;
  table.group_fingerprint = fingerprint(*g);
  table.exponent = g->exponent();
  long long e = table.exponent;
  long long q = pick_dixon_prime(e, n);
  table.dixon_prime = q;
  for (const auto& m : cc.members) table.class_sizes.push_back((long long)m.size());

  // class multiplication constants a[i][j][k]
  std::vector<std::vector<std::vector<int>>> a(
      k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
  for (int kk = 0; kk < k; ++kk) {
    int z = cc.reps[kk];
    for (int x = 0; x < n; ++x) {
      int i = cc.class_of[x];
      int j = cc.class_of[g->mult(g->inverse(x), z)];
      a[i][j][kk]++;
    }
  }

  // split the class algebra over F_q into common eigenvectors
  std::vector<EchelonSpace> spaces;
  {
    Mat full(k, std::vector<u64>(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(echelonize_columns(full, (u64)q));
  }
  for (int i = 0; i < k; ++i) {
    if (i == cc.identity_class) continue;
    bool all_one = true;
    for (const auto& s : spaces)
      if (!s.cols.empty() && s.cols[0].size() > 1) {
        all_one = false;
        break;
      }
    if (all_one) break;

    Mat mi(k, std::vector<u64>(k, 0));
    for (int j = 0; j < k; ++j)
      for (int kk = 0; kk < k; ++kk) mi[j][kk] = (u64)(a[i][j][kk] % q);

    std::vector<EchelonSpace> next;
    for (auto& s : spaces) {
      int d = s.cols.empty() ? 0 : (int)s.cols[0].size();
      if (d <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction R: M * S = S * R, coefficients read off the pivot rows
      Mat ms(k, std::vector<u64>(d, 0));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c) {
          u64 acc = 0;
          for (int t = 0; t < k; ++t) acc = (acc + mi[r][t] * s.cols[t][c]) % q;
          ms[r][c] = acc;
        }
      Mat rmat(d, std::vector<u64>(d, 0));
      for (int t = 0; t < d; ++t)
        for (int c = 0; c < d; ++c) rmat[t][c] = ms[s.pivots[t]][c];
      // invariance check
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c) {
          u64 acc = 0;
          for (int t = 0; t < d; ++t) acc = (acc + s.cols[r][t] * rmat[t][c]) % q;
          if (acc != ms[r][c]) throw std::logic_error("class matrix broke invariance");
        }

      auto poly = charpoly(rmat, (u64)q);
      int found = 0;
      for (u64 lam = 0; lam < (u64)q && found < d; ++lam) {
        if (poly_eval(poly, lam, (u64)q) != 0) continue;
        Mat shifted = rmat;
        for (int t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + q - lam) % q;
        Mat ker = kernel_basis(shifted, (u64)q);
        int r = ker.empty() ? 0 : (int)ker[0].size();
        if (r == 0) continue;
        found += r;
        Mat lifted(k, std::vector<u64>(r, 0));
        for (int row = 0; row < k; ++row)
          for (int c = 0; c < r; ++c) {
            u64 acc = 0;
            for (int t = 0; t < d; ++t) acc = (acc + s.cols[row][t] * ker[t][c]) % q;
            lifted[row][c] = acc;
          }
        next.push_back(echelonize_columns(lifted, (u64)q));
      }
      if (found != d) throw std::logic_error("class matrix not diagonalizable mod q");
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<u64>> omegas;  // per character: omega_j values
  for (const auto& s : spaces) {
    if (s.cols.empty() || s.cols[0].size() != 1)
      throw std::logic_error("class algebra splitting incomplete");
    std::vector<u64> v(k);
    for (int r = 0; r < k; ++r) v[r] = s.cols[r][0];
    u64 norm = mod_inv(v[cc.identity_class], (u64)q);
    for (auto& x : v) x = x * norm % q;
    omegas.push_back(std::move(v));
  }
  if ((int)omegas.size() != k) throw std::logic_error("wrong number of characters");

  // degrees and modular character values
  std::vector<std::vector<u64>> chi_mod(k, std::vector<u64>(k));
  std::vector<long long> degrees(k, 0);
  for (int t = 0; t < k; ++t) {
    u64 sum = 0;
    for (int j = 0; j < k; ++j) {
      u64 cinv = mod_inv((u64)cc.members[j].size() % q, (u64)q);
      sum = (sum + omegas[t][j] * omegas[t][cc.inverse_class[j]] % q * cinv) % q;
    }
    u64 d2 = (u64)(n % q) * mod_inv(sum, (u64)q) % q;
    long long deg = -1;
    for (long long d = 1; (long long)d * d <= n; ++d)
      if ((u64)(d * d % q) == d2) {
        deg = d;
        break;
      }
    if (deg < 0) throw std::logic_error("degree recovery failed");
    degrees[t] = deg;
    for (int j = 0; j < k; ++j) {
      u64 cinv = mod_inv((u64)cc.members[j].size() % q, (u64)q);
      chi_mod[t][j] = (u64)(deg % q) * omegas[t][j] % q * cinv % q;
    }
  }

  // power-map classes for the eigenvalue-multiplicity DFT
  std::vector<std::vector<int>> power_class(k, std::vector<int>(e));
  for (int j = 0; j < k; ++j) {
    int cur = 0;  // rep^0
    for (long long t = 0; t < e; ++t) {
      power_class[j][t] = cc.class_of[cur];
      cur = g->mult(cur, cc.reps[j]);
    }
  }

  u64 w = mod_pow(primitive_root((u64)q), (u64)((q - 1) / e), (u64)q);
  if (mod_pow(w, (u64)e, (u64)q) != 1) throw std::logic_error("bad root of unity");
  u64 einv = mod_inv((u64)(e % q), (u64)q);
  u64 winv = mod_inv(w, (u64)q);
  std::vector<u64> winv_pow((size_t)e);
  winv_pow[0] = 1;
  for (long long i = 1; i < e; ++i) winv_pow[i] = winv_pow[i - 1] * winv % q;

  table.irreducibles.resize(k);
  for (int t = 0; t < k; ++t) {
    Character chi;
    chi.degree = degrees[t];
    chi.values.reserve(k);
    for (int j = 0; j < k; ++j) {
      Cyclotomic val = Cyclotomic::from_rational(Rational(0), e);
      long long total = 0;
      for (long long l = 0; l < e; ++l) {
        u64 acc = 0;
        for (long long s = 0; s < e; ++s)
          acc = (acc + chi_mod[t][power_class[j][s]] * winv_pow[l * s % e]) % q;
        u64 ml = acc * einv % q;
        if (ml == 0) continue;
        if ((long long)ml > n) throw std::logic_error("eigenvalue multiplicity overflow");
        total += (long long)ml;
        val = val + Cyclotomic::zeta(e, l) * Cyclotomic::from_rational(Rational((long long)ml), e);
      }
      if (total != chi.degree) throw std::logic_error("multiplicities do not sum to degree");
      chi.values.push_back(std::move(val));
    }
    table.irreducibles[t] = std::move(chi);
  }

  std::sort(table.irreducibles.begin(), table.irreducibles.end(),
            [](const Character& x, const Character& y) {
              if (x.degree != y.degree) return x.degree < y.degree;
              std::string ex, ey;
              for (const auto& v : x.values) v.append_encoding(ex);
              for (const auto& v : y.values) v.append_encoding(ey);
              return ex < ey;
            });

  verify_character_table(table);
  return table;
}

void verify_character_table(CharacterTable& t) {
  const auto& cc = t.group->classes();
  int k = (int)cc.members.size();
  long long n = t.group->order();
  long long e = t.exponent;
  if ((int)t.irreducibles.size() != k)
    throw std::logic_error("character count differs from class count");

  long long sumsq = 0;
  for (auto& chi : t.irreducibles) {
    if ((int)chi.values.size() != k) throw std::logic_error("character length mismatch");
    Cyclotomic at_id = chi.values[cc.identity_class];
    if (!at_id.is_rational() || at_id.rational_value() != Rational(chi.degree))
      throw std::logic_error("degree does not match identity value");
    if (chi.degree <= 0 || n % chi.degree != 0)
      throw std::logic_error("degree must be a positive divisor of the order");
    for (const auto& v : chi.values)
      for (const auto& c : v.coeffs())
        if (!c.is_integer()) throw std::logic_error("character value is not an algebraic integer");
    sumsq += chi.degree * chi.degree;
    chi.kernel_class.assign(k, 0);
    Cyclotomic deg = Cyclotomic::from_rational(Rational(chi.degree), e);
    for (int j = 0; j < k; ++j) chi.kernel_class[j] = chi.values[j] == deg ? 1 : 0;
  }
  if (sumsq != n) throw std::logic_error("sum of squared degrees differs from group order");

  Cyclotomic zero = Cyclotomic::from_rational(Rational(0), e);
  Cyclotomic ord = Cyclotomic::from_rational(Rational(n), e);
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) {
      Cyclotomic acc = zero;
      for (int j = 0; j < k; ++j)
        acc = acc + Cyclotomic::from_rational(Rational((long long)cc.members[j].size()), e) *
                        t.irreducibles[x].values[j] *
                        t.irreducibles[y].values[cc.inverse_class[j]];
      Cyclotomic expect = x == y ? ord : zero;
      if (acc != expect) throw std::logic_error("row orthogonality failed");
    }
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) {
      Cyclotomic acc = zero;
      for (int t2 = 0; t2 < k; ++t2)
        acc = acc + t.irreducibles[t2].values[x] * t.irreducibles[t2].values[cc.inverse_class[y]];
      Cyclotomic expect =
          x == y ? Cyclotomic::from_rational(Rational(n, (long long)cc.members[x].size()), e)
                 : zero;
      if (acc != expect) throw std::logic_error("column orthogonality failed");
    }
}

namespace {

struct CoverInstance {
  std::vector<long long> degrees;
  std::vector<uint64_t> covers;
  std::vector<std::vector<int>> chi_indices;  // candidate -> character index set
  uint64_t full_mask = 0;
};

// Coverage bit w is set when the minimal normal subgroup w is NOT inside
// the kernel of the candidate.
CoverInstance build_instance(const CharacterTable& t,
                             const std::vector<EmbeddedGroup>& min_normals,
                             const std::vector<std::vector<int>>& candidate_sets) {
  const auto& cc = t.group->classes();
  if (min_normals.size() > 64) throw std::runtime_error("too many minimal normal subgroups");
  std::vector<std::vector<int>> normal_classes;
  for (const auto& mn : min_normals) {
    std::vector<int> cls;
    for (int x : mn.member_set) cls.push_back(cc.class_of[x]);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    normal_classes.push_back(std::move(cls));
  }

  CoverInstance inst;
  inst.full_mask = min_normals.empty() ? 0 : (min_normals.size() == 64
                                                  ? ~0ull
                                                  : (1ull << min_normals.size()) - 1);
  for (const auto& set : candidate_sets) {
    long long deg = 0;
    std::vector<char> kernel(cc.members.size(), 1);
    for (int ci : set) {
      deg += t.irreducibles[ci].degree;
      for (size_t j = 0; j < kernel.size(); ++j)
        kernel[j] = kernel[j] && t.irreducibles[ci].kernel_class[j];
    }
    uint64_t mask = 0;
    for (size_t w = 0; w < normal_classes.size(); ++w) {
      bool contained = true;
      for (int cls : normal_classes[w])
        if (!kernel[cls]) {
          contained = false;
          break;
        }
      if (!contained) mask |= 1ull << w;
    }
    inst.degrees.push_back(deg);
    inst.covers.push_back(mask);
    inst.chi_indices.push_back(set);
  }
  return inst;
}

struct SolveState {
  const CoverInstance* inst;
  long long best_cost = -1;
  std::vector<int> best_choice;
  std::vector<long long> min_cover_cost;  // per normal subgroup bit
  std::vector<int> current;
};

void solve_dfs(SolveState& st, size_t idx, long long cost, uint64_t mask) {
  const auto& inst = *st.inst;
  if (mask == inst.full_mask) {
    if (st.best_cost < 0 || cost < st.best_cost ||
        (cost == st.best_cost && st.current < st.best_choice)) {
      st.best_cost = cost;
      st.best_choice = st.current;
    }
    return;
  }
  if (idx >= inst.degrees.size()) return;
  if (st.best_cost >= 0) {
    long long bound = 0;
    for (size_t w = 0; w < st.min_cover_cost.size(); ++w)
      if (!(mask >> w & 1)) bound = std::max(bound, st.min_cover_cost[w]);
    if (cost + bound > st.best_cost) return;
  }
  if (inst.covers[idx] & ~mask) {
    st.current.push_back((int)idx);
    solve_dfs(st, idx + 1, cost + inst.degrees[idx], mask | inst.covers[idx]);
    st.current.pop_back();
  }
  solve_dfs(st, idx + 1, cost, mask);
}

RdimResult solve_cover(const CoverInstance& inst) {
  SolveState st;
  st.inst = &inst;
  size_t bits = 0;
  while (bits < 64 && (inst.full_mask >> bits)) ++bits;
  st.min_cover_cost.assign(bits, 0);
  for (size_t w = 0; w < bits; ++w) {
    long long best = -1;
    for (size_t c = 0; c < inst.degrees.size(); ++c)
      if (inst.covers[c] >> w & 1)
        if (best < 0 || inst.degrees[c] < best) best = inst.degrees[c];
    if (best < 0) throw std::logic_error("no character covers a minimal normal subgroup");
    st.min_cover_cost[w] = best;
  }
  solve_dfs(st, 0, 0, 0);
  if (st.best_cost < 0) throw std::logic_error("cover search found no solution");

  RdimResult out;
  out.value = st.best_cost;
  for (int c : st.best_choice) out.witness.push_back(inst.chi_indices[c]);
  return out;
}

}  // namespace

RdimResult rdim_split(const CharacterTable& t, const std::vector<EmbeddedGroup>& min_normals) {
  std::vector<std::vector<int>> singles;
  for (size_t i = 0; i < t.irreducibles.size(); ++i) singles.push_back({(int)i});
  auto inst = build_instance(t, min_normals, singles);
  auto result = solve_cover(inst);
  if (t.irreducibles.size() <= 12) {
    long long oracle = rdim_split_exhaustive(t);
    if (oracle != result.value) throw std::logic_error("branch-and-bound disagrees with oracle");
    result.optimality_exhaustive = true;
  }
  return result;
}

RdimResult rdim_rational_lower(const CharacterTable& t,
                               const std::vector<EmbeddedGroup>& min_normals) {
  auto orbits = galois_orbits(t);
  std::sort(orbits.begin(), orbits.end(), [&t](const auto& a, const auto& b) {
    long long da = 0, db = 0;
    for (int i : a) da += t.irreducibles[i].degree;
    for (int i : b) db += t.irreducibles[i].degree;
    if (da != db) return da < db;
    return a < b;
  });
  auto inst = build_instance(t, min_normals, orbits);
  return solve_cover(inst);
}

long long rdim_split_exhaustive(const CharacterTable& t) {
  const auto& cc = t.group->classes();
  size_t k = t.irreducibles.size();
  if (k > 24) throw std::runtime_error("exhaustive oracle capped at 24 irreducibles");
  long long best = -1;
  for (uint64_t sub = 1; sub < (1ull << k); ++sub) {
    std::vector<char> kernel(cc.members.size(), 1);
    long long deg = 0;
    for (size_t i = 0; i < k; ++i)
      if (sub >> i & 1) {
        deg += t.irreducibles[i].degree;
        for (size_t j = 0; j < kernel.size(); ++j)
          kernel[j] = kernel[j] && t.irreducibles[i].kernel_class[j];
      }
    long long kernel_size = 0;
    for (size_t j = 0; j < kernel.size(); ++j)
      if (kernel[j]) kernel_size += (long long)cc.members[j].size();
    if (kernel_size == 1 && (best < 0 || deg < best)) best = deg;
  }
  return best;
}

int frobenius_schur(const CharacterTable& t, int chi_index) {
  const auto& cc = t.group->classes();
  long long e = t.exponent;
  Cyclotomic acc = Cyclotomic::from_rational(Rational(0), e);
  for (size_t j = 0; j < cc.members.size(); ++j) {
    int sq = cc.class_of[t.group->mult(cc.reps[j], cc.reps[j])];
    acc = acc + Cyclotomic::from_rational(Rational((long long)cc.members[j].size()), e) *
                    t.irreducibles[chi_index].values[sq];
  }
  if (!acc.is_rational()) throw std::logic_error("corrupt table");
  Rational nu = acc.rational_value() / Rational(t.group->order());
  if (!nu.is_integer() || nu.num() < -1 || nu.num() > 1) throw std::logic_error("corrupt table");
  return (int)nu.num();
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& t) {
  long long e = t.exponent;
  size_t k = t.irreducibles.size();
  std::unordered_map<std::string, int> by_encoding;
  for (size_t i = 0; i < k; ++i) {
    std::string enc;
    for (const auto& v : t.irreducibles[i].values) v.append_encoding(enc);
    by_encoding.emplace(std::move(enc), (int)i);
  }
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long long aexp = 1; aexp < e || (e == 1 && aexp == 1); ++aexp) {
    if (e > 1 && std::gcd(aexp, e) != 1) continue;
    for (size_t i = 0; i < k; ++i) {
      std::string enc;
      for (const auto& v : t.irreducibles[i].values) v.galois(aexp).append_encoding(enc);
      auto it = by_encoding.find(enc);
      if (it == by_encoding.end()) throw std::logic_error("galois image is not in the table");
      int a = find((int)i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    if (e == 1) break;
  }
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < k; ++i) groups[find((int)i)].push_back((int)i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace polyrep
