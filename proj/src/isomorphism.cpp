#include "polyrep/isomorphism.hpp"

#include <algorithm>

#include "polyrep/group_ops.hpp"

namespace polyrep {

std::vector<int> small_generating_set(const Group& g) {
  std::vector<int> gens;
  std::vector<int> span = {0};
  for (int x = 1; x < g.order() && (int)span.size() < g.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = subgroup_element_ids(g, gens);
  }
  // prune redundant generators, later ones first
  for (int i = (int)gens.size() - 1; i >= 0; --i) {
    std::vector<int> trial;
    for (int j = 0; j < (int)gens.size(); ++j)
      if (j != i) trial.push_back(gens[j]);
    if ((int)subgroup_element_ids(g, trial).size() == g.order()) gens = std::move(trial);
  }
  return gens;
}

namespace {

struct BfsProvenance {
  std::vector<int> order;   // element ids in BFS discovery order (starts at identity)
  std::vector<int> parent;  // by id
  std::vector<int> via;     // generator index by id
};

BfsProvenance bfs_words(const Group& g, const std::vector<int>& gens) {
  BfsProvenance p;
  p.parent.assign(g.order(), -1);
  p.via.assign(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  p.order.push_back(0);
  for (size_t qi = 0; qi < p.order.size(); ++qi) {
    int x = p.order[qi];
    for (size_t j = 0; j < gens.size(); ++j) {
      int y = g.mult(x, gens[j]);
      if (!seen[y]) {
        seen[y] = true;
        p.parent[y] = x;
        p.via[y] = (int)j;
        p.order.push_back(y);
      }
    }
  }
  return p;
}

// Builds the homomorphism determined by generator images and verifies it.
bool try_images(const Group& g1, const Group& g2, const std::vector<int>& gens,
                const BfsProvenance& prov, const std::vector<int>& images,
                std::vector<int>& phi) {
  phi.assign(g1.order(), -1);
  std::vector<bool> hit(g2.order(), false);
  phi[0] = 0;
  hit[0] = true;
  for (size_t qi = 1; qi < prov.order.size(); ++qi) {
    int y = prov.order[qi];
    int img = g2.mult(phi[prov.parent[y]], images[prov.via[y]]);
    if (hit[img]) return false;  // not injective
    phi[y] = img;
    hit[img] = true;
  }
  for (int x = 0; x < g1.order(); ++x)
    for (size_t j = 0; j < gens.size(); ++j)
      if (phi[g1.mult(x, gens[j])] != g2.mult(phi[x], images[j])) return false;
  return true;
}

bool backtrack(const Group& g1, const Group& g2, const std::vector<int>& gens,
               const BfsProvenance& prov, const std::vector<std::vector<int>>& candidates,
               std::vector<int>& images, size_t depth, std::vector<int>& phi) {
  if (depth == gens.size()) return try_images(g1, g2, gens, prov, images, phi);
  for (int cand : candidates[depth]) {
    images[depth] = cand;
    // product orders with the already-assigned generators must agree
    bool ok = true;
    for (size_t j = 0; j < depth && ok; ++j) {
      if (g1.element_order(g1.mult(gens[j], gens[depth])) !=
          g2.element_order(g2.mult(images[j], cand)))
        ok = false;
    }
    if (ok && backtrack(g1, g2, gens, prov, candidates, images, depth + 1, phi)) return true;
  }
  return false;
}

}  // namespace

IsoResult is_isomorphic(const GroupPtr& g1, const GroupPtr& g2) {
  if (g1->order() > 10000 || g2->order() > 10000)
    throw std::invalid_argument("isomorphism test capped at order 10^4");

  IsoResult result;
  Fingerprint f1 = fingerprint(*g1);
  Fingerprint f2 = fingerprint(*g2);
  std::string mismatch = fingerprint_mismatch(f1, f2);
  if (!mismatch.empty()) {
    result.isomorphic = false;
    result.reason = "fingerprint mismatch: " + mismatch;
    return result;
  }

  std::vector<int> gens = small_generating_set(*g1);
  if (gens.empty()) {  // trivial group
    result.isomorphic = true;
    result.witness = {0};
    return result;
  }
  BfsProvenance prov = bfs_words(*g1, gens);

  const auto& cc1 = g1->classes();
  const auto& cc2 = g2->classes();
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    int ord = g1->element_order(gens[j]);
    size_t csize = cc1.members[cc1.class_of[gens[j]]].size();
    for (int y = 0; y < g2->order(); ++y)
      if (g2->element_order(y) == ord && cc2.members[cc2.class_of[y]].size() == csize)
        candidates[j].push_back(y);
  }

  std::vector<int> images(gens.size(), -1);
  std::vector<int> phi;
  if (backtrack(*g1, *g2, gens, prov, candidates, images, 0, phi)) {
    result.isomorphic = true;
    result.witness = std::move(phi);
    return result;
  }
  result.isomorphic = false;
  result.reason = "backtrack exhausted";
  return result;
}

}  // namespace polyrep
