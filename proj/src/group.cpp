#include "polyrep/group.hpp"

#include <numeric>

namespace polyrep {

int Group::element_order(int a) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (order_cache_.empty()) order_cache_.assign(n_, 0);
    if (order_cache_[a]) return order_cache_[a];
  }
  int ord = 1, cur = a;
  while (cur != 0) {
    cur = mult(cur, a);
    ++ord;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  order_cache_[a] = ord;
  return ord;
}

long long Group::exponent() const {
  long long e = 1;
  for (int x = 0; x < n_; ++x) e = std::lcm(e, (long long)element_order(x));
  return e;
}

const ConjugacyClasses& Group::classes() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (classes_cache_) return *classes_cache_;

  auto cc = std::make_unique<ConjugacyClasses>();
  std::vector<int> cls(n_, -1);
  std::vector<std::vector<int>> raw;
  for (int x = 0; x < n_; ++x) {
    if (cls[x] >= 0) continue;
    int idx = (int)raw.size();
    std::vector<int> orbit = {x};
    cls[x] = idx;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (int g : gen_ids_) {
        int y = conj(g, orbit[qi]);
        if (cls[y] < 0) {
          cls[y] = idx;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw.push_back(std::move(orbit));
  }

  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&raw](int a, int b) {
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a][0] < raw[b][0];
  });
  cc->members.resize(raw.size());
  cc->reps.resize(raw.size());
  cc->class_of.assign(n_, -1);
  for (size_t k = 0; k < perm.size(); ++k) {
    cc->members[k] = std::move(raw[perm[k]]);
    cc->reps[k] = cc->members[k][0];
    for (int x : cc->members[k]) cc->class_of[x] = (int)k;
  }
  cc->identity_class = cc->class_of[0];
  cc->inverse_class.resize(cc->members.size());
  for (size_t k = 0; k < cc->members.size(); ++k)
    cc->inverse_class[k] = cc->class_of[inverse_[cc->reps[k]]];

  classes_cache_ = std::move(cc);
  return *classes_cache_;
}

}  // namespace polyrep
