#include "polyrep/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polyrep/laws.hpp"

namespace polyrep {

std::vector<int> subgroup_element_ids(const Group& g, const std::vector<int>& gen_ids) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> queue;
  in[0] = true;
  queue.push_back(0);
  std::vector<int> gens;
  for (int x : gen_ids)
    if (x != 0) gens.push_back(x);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int w : gens) {
      int y = g.mult(queue[qi], w);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

EmbeddedGroup make_subgroup(const GroupPtr& parent, std::vector<int> gen_ids,
                            const std::string& label) {
  ParentIdLaw law{parent};
  ClosureOptions opt;
  opt.label = label;
  auto res = close_group(law, std::move(gen_ids), opt);
  EmbeddedGroup out;
  out.group = res.group;
  out.parent_ids = res.elements;
  out.member_set = res.elements;
  std::sort(out.member_set.begin(), out.member_set.end());
  return out;
}

bool is_normal(const Group& g, const std::vector<int>& members_sorted) {
  for (int gen : g.generator_ids())
    for (int m : members_sorted)
      if (!std::binary_search(members_sorted.begin(), members_sorted.end(), g.conj(gen, m)))
        return false;
  return true;
}

std::vector<EmbeddedGroup> minimal_normal_subgroups(const GroupPtr& g) {
  const auto& cc = g->classes();
  std::vector<std::vector<int>> candidates;
  for (size_t k = 0; k < cc.members.size(); ++k) {
    if ((int)k == cc.identity_class) continue;
    auto ids = subgroup_element_ids(*g, cc.members[k]);
    if (std::find(candidates.begin(), candidates.end(), ids) == candidates.end())
      candidates.push_back(std::move(ids));
  }
  std::vector<std::vector<int>> minimal;
  for (const auto& a : candidates) {
    bool is_min = true;
    for (const auto& b : candidates) {
      if (b.size() >= a.size() || b == a) continue;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<EmbeddedGroup> out;
  for (auto& m : minimal) out.push_back(make_subgroup(g, m, "minimal normal subgroup"));
  return out;
}

QuotientGroup quotient_group(const GroupPtr& g, const std::vector<int>& normal_members) {
  std::vector<int> members = normal_members;
  std::sort(members.begin(), members.end());
  if (members.empty() || members[0] != 0)
    throw std::invalid_argument("normal subgroup must contain the identity");
  if (!is_normal(*g, members)) throw std::invalid_argument("not normal");

  int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    coset.reserve(members.size());
    for (int m : members) coset.push_back(g->mult(x, m));
    std::sort(coset.begin(), coset.end());
    int idx = (int)cosets.size();
    for (int y : coset) coset_of[y] = idx;
    cosets.push_back(std::move(coset));
  }

  auto cosets_shared =
      std::make_shared<const std::vector<std::vector<int>>>(std::move(cosets));
  auto coset_of_shared = std::make_shared<const std::vector<int>>(std::move(coset_of));
  CosetLaw law{g, cosets_shared, coset_of_shared};
  std::vector<int> gen_cosets;
  for (int gen : g->generator_ids()) gen_cosets.push_back((*coset_of_shared)[gen]);
  ClosureOptions opt;
  opt.label = g->label() + " quotient";
  auto res = close_group(law, gen_cosets, opt);

  QuotientGroup out;
  out.group = res.group;
  out.fibers.resize(res.group->order());
  std::vector<int> coset_to_gid(cosets_shared->size(), -1);
  for (int gid = 0; gid < (int)res.elements.size(); ++gid)
    coset_to_gid[res.elements[gid]] = gid;
  out.projection.resize(n);
  for (int x = 0; x < n; ++x) {
    int gid = coset_to_gid[(*coset_of_shared)[x]];
    out.projection[x] = gid;
  }
  for (int ci = 0; ci < (int)cosets_shared->size(); ++ci)
    out.fibers[coset_to_gid[ci]] = (*cosets_shared)[ci];
  return out;
}

ProductGroup product_group(ProductKind kind, const GroupPtr& n, const GroupPtr& h,
                           std::vector<std::vector<int>> action, const std::string& label) {
  int nn = n->order(), nh = h->order();
  if (kind == ProductKind::direct) {
    std::vector<int> id_perm(nn);
    std::iota(id_perm.begin(), id_perm.end(), 0);
    action.assign(nh, id_perm);
  }
  if ((int)action.size() != nh) throw std::invalid_argument("action size mismatch");

  bool trivial = kind == ProductKind::direct;
  for (int hid = 0; hid < nh && !trivial; ++hid) {
    const auto& p = action[hid];
    if ((int)p.size() != nn) throw std::invalid_argument("action permutation size mismatch");
    std::vector<bool> seen(nn, false);
    for (int v : p) {
      if (v < 0 || v >= nn || seen[v])
        throw std::invalid_argument("action is not by permutations");
      seen[v] = true;
    }
    if (p[0] != 0) throw std::invalid_argument("action does not fix the identity");
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        if (p[n->mult(a, b)] != n->mult(p[a], p[b]))
          throw std::invalid_argument("action is not by automorphisms");
  }
  if (!trivial) {
    for (int x = 0; x < nn; ++x)
      if (action[0][x] != x)
        throw std::invalid_argument("action of the identity must be trivial");
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2) {
        int h12 = h->mult(h1, h2);
        for (int x = 0; x < nn; ++x)
          if (action[h12][x] != action[h1][action[h2][x]])
            throw std::invalid_argument("action is not a homomorphism");
      }
  }

  auto action_shared =
      std::make_shared<const std::vector<std::vector<int>>>(std::move(action));
  SemidirectLaw law{n, h, action_shared};
  std::vector<SemidirectLaw::Element> gens;
  for (int gid : n->generator_ids()) gens.push_back({gid, 0});
  for (int gid : h->generator_ids()) gens.push_back({0, gid});
  ClosureOptions opt;
  opt.label = label;
  auto res = close_group(law, gens, opt);
  if (res.group->order() != nn * nh)
    throw std::logic_error("product closure has wrong order");

  ProductGroup out;
  out.group = res.group;
  out.pair_of = res.elements;
  return out;
}

std::vector<int> center_ids(const Group& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int gen : g.generator_ids())
      if (g.mult(x, gen) != g.mult(gen, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<int> derived_subgroup_ids(const Group& g) {
  // normal closure of the generator commutators = union of their classes
  const auto& cc = g.classes();
  std::set<int> seeds;
  for (int a : g.generator_ids())
    for (int b : g.generator_ids()) {
      int comm = g.mult(g.mult(g.inverse(a), g.inverse(b)), g.mult(a, b));
      for (int m : cc.members[cc.class_of[comm]]) seeds.insert(m);
    }
  return subgroup_element_ids(g, std::vector<int>(seeds.begin(), seeds.end()));
}

namespace {

// Invariant factors of an abelian group given its element-order counts.
std::vector<long long> abelian_invariants_from_orders(const std::map<long long, long long>& cnt,
                                                      long long order) {
  if (order == 1) return {};
  std::map<long long, std::vector<long long>> partitions;  // p -> descending parts
  long long rest = order;
  std::vector<long long> primes;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  for (long long p : primes) {
    // n_k = #elements killed by p^k; r_k = log_p(n_k/n_{k-1}) counts parts >= k
    std::vector<long long> nk = {1};
    while (true) {
      long long pk = 1;
      for (size_t i = 0; i < nk.size(); ++i) pk *= p;
      long long count = 0;
      for (const auto& [o, c] : cnt)
        if (pk % o == 0) count += c;
      if (count == nk.back()) break;
      nk.push_back(count);
    }
    std::vector<long long> r;
    for (size_t k = 1; k < nk.size(); ++k) {
      long long ratio = nk[k] / nk[k - 1], e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      r.push_back(e);
    }
    std::vector<long long> parts;
    for (long long j = 1; j <= (r.empty() ? 0 : r[0]); ++j) {
      long long part = 0;
      for (long long rk : r)
        if (rk >= j) ++part;
      parts.push_back(part);  // parts of the conjugate partition, descending
    }
    partitions[p] = parts;
  }

  size_t max_len = 0;
  for (const auto& [p, parts] : partitions) max_len = std::max(max_len, parts.size());
  std::vector<long long> factors(max_len, 1);
  for (const auto& [p, parts] : partitions)
    for (size_t j = 0; j < parts.size(); ++j) {
      long long pk = 1;
      for (long long i = 0; i < parts[j]; ++i) pk *= p;
      factors[j] *= pk;  // j = 0 is the largest factor
    }
  std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
  return factors;
}

}  // namespace

Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  fp.order = g.order();
  std::map<int, long long> spec;
  for (int x = 0; x < g.order(); ++x) spec[g.element_order(x)]++;
  fp.spectrum.assign(spec.begin(), spec.end());
  fp.center_order = (long long)center_ids(g).size();
  auto derived = derived_subgroup_ids(g);
  fp.derived_order = (long long)derived.size();

  // element orders of the abelianization, via the coset partition
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = (int)reps.size();
    reps.push_back(x);
    for (int m : derived) coset_of[g.mult(x, m)] = idx;
  }
  std::map<long long, long long> cnt;
  for (int r : reps) {
    int cur = r, ord = 1;
    while (coset_of[cur] != coset_of[0]) {
      cur = g.mult(cur, r);
      ++ord;
    }
    cnt[ord]++;
  }
  fp.abelian_invariants = abelian_invariants_from_orders(cnt, (long long)reps.size());
  return fp;
}

std::string Fingerprint::str() const {
  std::string s = "order=" + std::to_string(order) + " spectrum{";
  for (const auto& [o, c] : spectrum) s += std::to_string(o) + ":" + std::to_string(c) + " ";
  s += "} center=" + std::to_string(center_order) + " derived=" + std::to_string(derived_order) +
       " ab=[";
  for (long long d : abelian_invariants) s += std::to_string(d) + " ";
  return s + "]";
}

uint64_t Fingerprint::hash64() const {
  std::string s = str();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b) {
  if (a.order != b.order) return "order";
  if (a.spectrum != b.spectrum) return "element-order spectrum";
  if (a.center_order != b.center_order) return "center order";
  if (a.derived_order != b.derived_order) return "derived subgroup order";
  if (a.abelian_invariants != b.abelian_invariants) return "abelianization";
  return "";
}

}  // namespace polyrep
