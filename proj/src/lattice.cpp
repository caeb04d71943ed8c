#include "polyrep/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace polyrep {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out;
  out.n = x.n;
  out.a.assign((size_t)x.n * x.n, 0);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      long long v = x.at(r, k);
      if (!v) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
  std::vector<long long> out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<int> IntMatrix::apply_mod(const std::vector<int>& v, int d) const {
  std::vector<int> out(n, 0);
  for (int r = 0; r < n; ++r) {
    long long acc = 0;
    for (int c = 0; c < n; ++c) acc += at(r, c) * v[c];
    acc %= d;
    if (acc < 0) acc += d;
    out[r] = (int)acc;
  }
  return out;
}

long long IntMatrix::determinant() const {
  // fraction-free via rationals would be overkill; n <= 8, use Laplace on
  // a working copy with integer row elimination (Bareiss).
  std::vector<long long> m = a;
  long long prev = 1, det = 1;
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[(size_t)r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m[(size_t)pivot * n + c], m[(size_t)col * n + c]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c)
        m[(size_t)r * n + c] =
            (m[(size_t)r * n + c] * m[(size_t)col * n + col] -
             m[(size_t)r * n + col] * m[(size_t)col * n + c]) /
            prev;
      m[(size_t)r * n + col] = 0;
    }
    prev = m[(size_t)col * n + col];
  }
  det = m[(size_t)(n - 1) * n + (n - 1)];
  return sign * det;
}

std::string IntMatrix::encoding() const {
  std::string s;
  s.reserve(a.size() * 2);
  for (long long v : a) {
    if (v < -32000 || v > 32000) throw std::overflow_error("matrix entry out of range");
    unsigned short u = (unsigned short)(v + 32768);
    s.push_back((char)(u & 0xff));
    s.push_back((char)(u >> 8));
  }
  return s;
}

namespace {

// Reflection matrices from a Gram matrix: s_i(alpha_c) = alpha_c -
// (2 B[i][c] / B[i][i]) alpha_i, integral by the crystallographic condition.
std::vector<IntMatrix> simple_reflections(const std::vector<std::vector<long long>>& gram) {
  int n = (int)gram.size();
  std::vector<IntMatrix> out;
  for (int i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
      long long num = 2 * gram[i][c];
      if (num % gram[i][i] != 0) throw std::logic_error("gram matrix is not crystallographic");
      m.at(i, c) -= num / gram[i][i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<long long>> simply_laced_gram(int n,
                                                      const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
  return g;
}

LatticeAction make_b_family(int n) {
  if (n < 1) throw std::invalid_argument("B family needs rank >= 1");
  LatticeAction L;
  L.name = "B" + std::to_string(n);
  L.rank = n;
  L.default_modulus = 4;
  L.omega_description = "spinors";
  L.omega_seed.assign(n, 0);
  L.omega_seed[n - 1] = 1;  // the weight s = (1/2, ..., 1/2)

  // basis (e_1, ..., e_{n-1}, s); coordinate transpositions, the last one
  // and the sign flip written through e_n = 2s - sum e_j
  for (int i = 0; i + 2 < n; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    m.at(i, i) = m.at(i + 1, i + 1) = 0;
    m.at(i, i + 1) = m.at(i + 1, i) = 1;
    L.weyl_generators.push_back(std::move(m));
  }
  if (n >= 2) {
    IntMatrix m = IntMatrix::identity(n);
    for (int r = 0; r < n - 1; ++r) m.at(r, n - 2) = -1;
    m.at(n - 1, n - 2) = 2;
    m.at(n - 2, n - 2) = -1;
    L.weyl_generators.push_back(std::move(m));
  }
  {
    IntMatrix m = IntMatrix::identity(n);
    for (int r = 0; r < n - 1; ++r) m.at(r, n - 1) = 1;
    m.at(n - 1, n - 1) = -1;
    L.weyl_generators.push_back(std::move(m));
  }

  L.weyl_order = 1;
  for (int i = 1; i <= n; ++i) L.weyl_order *= 2ll * i;  // 2^n n!
  for (const auto& g : L.weyl_generators) {
    long long det = g.determinant();
    if (det != 1 && det != -1) throw std::logic_error("generator is not unimodular");
    if (!(g * g == IntMatrix::identity(n))) throw std::logic_error("generator is not an involution");
  }
  return L;
}

}  // namespace

long long matrix_group_order(const std::vector<IntMatrix>& gens, size_t cap) {
  std::unordered_set<std::string> seen;
  std::vector<IntMatrix> queue;
  IntMatrix id = IntMatrix::identity(gens.empty() ? 1 : gens[0].n);
  seen.insert(id.encoding());
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      IntMatrix y = queue[qi] * g;
      if (seen.insert(y.encoding()).second) {
        if (seen.size() > cap) throw std::runtime_error("closure cap");
        queue.push_back(std::move(y));
      }
    }
  }
  return (long long)seen.size();
}

LatticeAction build_lattice(const std::string& name, int rank) {
  LatticeAction L;
  std::vector<std::vector<long long>> gram;
  long long expected_order = 0;
  int seed_index = 0;

  if (name == "A1") {
    gram = {{2}};
    expected_order = 2;
    L.omega_description = "roots";
  } else if (name == "G2") {
    gram = {{2, -3}, {-3, 6}};  // alpha_1 short, alpha_2 long
    expected_order = 12;
    L.omega_description = "short roots";
    seed_index = 0;
  } else if (name == "A3") {
    gram = simply_laced_gram(3, {{0, 1}, {1, 2}});
    expected_order = 24;
    L.omega_description = "roots";
  } else if (name == "F4") {
    // alpha_1, alpha_2 long; alpha_3, alpha_4 short (norms doubled to stay integral)
    gram = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    expected_order = 1152;
    L.omega_description = "short roots";
    seed_index = 2;
  } else if (name == "D5") {
    gram = simply_laced_gram(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    expected_order = 1920;
    L.omega_description = "roots";
  } else if (name == "E6") {
    gram = simply_laced_gram(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    expected_order = 51840;
    L.omega_description = "roots";
  } else if (name == "B") {
    return make_b_family(rank);
  } else {
    throw std::invalid_argument("unknown lattice name: " + name);
  }

  L.name = name;
  L.rank = (int)gram.size();
  L.default_modulus = name == "E6" ? 3 : 4;
  L.weyl_generators = simple_reflections(gram);
  L.omega_seed.assign(L.rank, 0);
  L.omega_seed[seed_index] = 1;
  L.weyl_order = matrix_group_order(L.weyl_generators);
  if (L.weyl_order != expected_order)
    throw std::logic_error("Weyl group closure has unexpected order for " + name);
  return L;
}

namespace {

long long encode_vec(const std::vector<int>& v, int d) {
  long long code = 0;
  for (int x : v) code = code * d + x;
  return code;
}

std::vector<int> decode_vec(long long code, int d, int rank) {
  std::vector<int> v(rank);
  for (int i = rank - 1; i >= 0; --i) {
    v[i] = (int)(code % d);
    code /= d;
  }
  return v;
}

}  // namespace

OrbitDecomposition orbits_mod(const LatticeAction& lattice, int d) {
  if (d != 2 && d != 3 && d != 4 && d != 6) throw std::invalid_argument("modulus must be 2, 3, 4 or 6");
  double total = 1;
  for (int i = 0; i < lattice.rank; ++i) total *= d;
  if (total > 1e7) throw std::runtime_error("residue space exceeds 10^7");
  long long count = 1;
  for (int i = 0; i < lattice.rank; ++i) count *= d;

  OrbitDecomposition out;
  out.modulus = d;
  out.rank = lattice.rank;
  std::vector<int> orbit_of((size_t)count, -1);
  std::vector<std::vector<long long>> orbit_codes;
  for (long long seed = 0; seed < count; ++seed) {
    if (orbit_of[seed] >= 0) continue;
    int idx = (int)orbit_codes.size();
    std::vector<long long> members = {seed};
    orbit_of[seed] = idx;
    for (size_t qi = 0; qi < members.size(); ++qi) {
      std::vector<int> v = decode_vec(members[qi], d, lattice.rank);
      for (const auto& g : lattice.weyl_generators) {
        long long code = encode_vec(g.apply_mod(v, d), d);
        if (orbit_of[code] < 0) {
          orbit_of[code] = idx;
          members.push_back(code);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbit_codes.push_back(std::move(members));
  }

  std::vector<int> order((int)orbit_codes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&orbit_codes](int a, int b) {
    if (orbit_codes[a].size() != orbit_codes[b].size())
      return orbit_codes[a].size() < orbit_codes[b].size();
    return orbit_codes[a][0] < orbit_codes[b][0];
  });
  for (int oi : order) {
    std::vector<std::vector<int>> members;
    members.reserve(orbit_codes[oi].size());
    for (long long code : orbit_codes[oi]) members.push_back(decode_vec(code, d, lattice.rank));
    out.orbit_sizes.push_back((long long)members.size());
    out.orbit_reps.push_back(members.front());
    out.orbit_members.push_back(std::move(members));
  }
  return out;
}

namespace {

// rank over F_p of the reductions of the vectors
int mod_p_rank(const std::vector<std::vector<int>>& vectors, int n, int p) {
  std::vector<std::vector<int>> basis;
  for (const auto& vec : vectors) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((vec[i] % p) + p) % p;
    for (const auto& b : basis) {
      int pivot = -1;
      for (int i = 0; i < n; ++i)
        if (b[i]) {
          pivot = i;
          break;
        }
      if (pivot < 0 || v[pivot] == 0) continue;
      int f = v[pivot];  // b[pivot] == 1
      for (int i = 0; i < n; ++i) v[i] = ((v[i] - f * b[i]) % p + p) % p;
    }
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (v[i]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    // normalize pivot to 1
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * v[pivot] % p == 1) {
        inv = x;
        break;
      }
    for (int i = 0; i < n; ++i) v[i] = v[i] * inv % p;
    basis.push_back(std::move(v));
    if ((int)basis.size() == n) break;
  }
  return (int)basis.size();
}

std::vector<int> prime_support(int d) {
  switch (d) {
    case 2: return {2};
    case 3: return {3};
    case 4: return {2};
    case 6: return {2, 3};
  }
  throw std::invalid_argument("modulus must be 2, 3, 4 or 6");
}

}  // namespace

bool generates_mod(const std::vector<std::vector<int>>& vectors, int n, int d) {
  for (int p : prime_support(d))
    if (mod_p_rank(vectors, n, p) != n) return false;
  return true;
}

bool generates_mod_bruteforce(const std::vector<std::vector<int>>& vectors, int n, int d) {
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= d;
  std::vector<char> in((size_t)count, 0);
  std::vector<long long> queue;
  in[0] = 1;
  queue.push_back(0);
  std::vector<long long> gen_codes;
  for (const auto& v : vectors) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = ((v[i] % d) + d) % d;
    gen_codes.push_back(encode_vec(r, d));
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> v = decode_vec(queue[qi], d, n);
    for (long long gc : gen_codes) {
      std::vector<int> g = decode_vec(gc, d, n);
      std::vector<int> sum(n);
      for (int i = 0; i < n; ++i) sum[i] = (v[i] + g[i]) % d;
      long long code = encode_vec(sum, d);
      if (!in[code]) {
        in[code] = 1;
        queue.push_back(code);
      }
    }
  }
  return (long long)queue.size() == count;
}

namespace {

// Span state per prime: reduced echelon basis rows, canonically encoded so
// equal subspaces memoize together.
struct SpanState {
  std::vector<std::vector<std::vector<int>>> basis;  // per prime

  std::string key() const {
    std::string s;
    for (const auto& b : basis) {
      s += '|';
      for (const auto& row : b)
        for (int x : row) s += (char)('0' + x);
    }
    return s;
  }
};

void add_to_basis(std::vector<std::vector<int>>& basis, std::vector<int> v, int p, int n) {
  for (const auto& b : basis) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (b[i]) {
        pivot = i;
        break;
      }
    if (pivot < 0 || v[pivot] == 0) continue;
    int f = v[pivot];
    for (int i = 0; i < n; ++i) v[i] = ((v[i] - f * b[i]) % p + p) % p;
  }
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (v[i]) {
      pivot = i;
      break;
    }
  if (pivot < 0) return;
  int inv = 1;
  for (int x = 1; x < p; ++x)
    if (x * v[pivot] % p == 1) {
      inv = x;
      break;
    }
  for (int i = 0; i < n; ++i) v[i] = v[i] * inv % p;
  // reduce earlier rows against the new one, keep rows sorted by pivot
  for (auto& b : basis) {
    int f = b[pivot];
    if (!f) continue;
    for (int i = 0; i < n; ++i) b[i] = ((b[i] - f * v[i]) % p + p) % p;
  }
  basis.push_back(std::move(v));
  std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) {
    return std::find_if(x.begin(), x.end(), [](int t) { return t != 0; }) - x.begin() <
           std::find_if(y.begin(), y.end(), [](int t) { return t != 0; }) - y.begin();
  });
}

struct SymrankSearch {
  const OrbitDecomposition* dec;
  std::vector<int> primes;
  int n;
  long long best_cost = -1;
  std::vector<int> best_choice;
  std::vector<int> current;
  std::unordered_map<std::string, long long> state_best;

  bool full(const SpanState& st) const {
    for (const auto& b : st.basis)
      if ((int)b.size() != n) return false;
    return true;
  }

  SpanState absorb(const SpanState& st, int orbit) const {
    SpanState out = st;
    for (size_t pi = 0; pi < primes.size(); ++pi)
      for (const auto& v : dec->orbit_members[orbit]) {
        std::vector<int> r(n);
        for (int i = 0; i < n; ++i) r[i] = v[i] % primes[pi];
        add_to_basis(out.basis[pi], std::move(r), primes[pi], n);
      }
    return out;
  }

  void dfs(size_t idx, long long cost, const SpanState& st) {
    if (full(st)) {
      if (best_cost < 0 || cost < best_cost ||
          (cost == best_cost && current < best_choice)) {
        best_cost = cost;
        best_choice = current;
      }
      return;
    }
    if (idx >= dec->orbit_sizes.size()) return;
    if (best_cost >= 0 && cost >= best_cost) return;
    std::string key = st.key() + "#" + std::to_string(idx);
    auto it = state_best.find(key);
    if (it != state_best.end() && it->second <= cost) return;
    state_best[key] = cost;

    SpanState with = absorb(st, (int)idx);
    bool helps = false;
    for (size_t pi = 0; pi < primes.size(); ++pi)
      if (with.basis[pi].size() != st.basis[pi].size()) helps = true;
    if (helps) {
      current.push_back((int)idx);
      dfs(idx + 1, cost + dec->orbit_sizes[idx], with);
      current.pop_back();
    }
    dfs(idx + 1, cost, st);
  }
};

}  // namespace

SymrankResult symrank(const LatticeAction& lattice, int d) {
  SymrankResult out;
  out.orbits = orbits_mod(lattice, d);

  SymrankSearch search;
  search.dec = &out.orbits;
  search.primes = prime_support(d);
  search.n = lattice.rank;
  SpanState empty;
  empty.basis.resize(search.primes.size());
  search.dfs(0, 0, empty);
  if (search.best_cost < 0) throw std::logic_error("no orbit union generates L/dL");

  out.value = search.best_cost;
  out.witness_orbits = search.best_choice;
  for (int oi : out.witness_orbits) out.witness_reps.push_back(out.orbits.orbit_reps[oi]);
  out.search_exhausted = true;

  // certificate: the union of every orbit smaller than the optimum fails
  std::vector<std::vector<int>> small_union;
  for (size_t oi = 0; oi < out.orbits.orbit_sizes.size(); ++oi)
    if (out.orbits.orbit_sizes[oi] < out.value)
      for (const auto& v : out.orbits.orbit_members[oi]) small_union.push_back(v);
  out.smaller_orbits_do_not_generate = !generates_mod(small_union, lattice.rank, d);
  return out;
}

std::vector<std::vector<long long>> integer_orbit(const LatticeAction& lattice,
                                                  const std::vector<long long>& seed,
                                                  size_t cap) {
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  seen.insert(seed);
  queue.push_back(seed);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : lattice.weyl_generators) {
      auto y = g.apply(queue[qi]);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::runtime_error("orbit cap");
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace polyrep
