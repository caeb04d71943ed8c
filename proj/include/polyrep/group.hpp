#pragma once

// Finite groups materialized from generators.
//
// close_group() runs a breadth-first closure from the sorted generator
// list, so element ids are reproducible across runs.  Groups of order at
// most kTableThreshold get a dense Cayley table (filled in O(n^2) from the
// BFS provenance); larger groups multiply through a hash of canonical
// element encodings.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyrep {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ConjugacyClasses {
  std::vector<int> class_of;              // element id -> class index
  std::vector<std::vector<int>> members;  // sorted ids, classes sorted by (size, min id)
  std::vector<int> reps;                  // minimal member id per class
  std::vector<int> inverse_class;
  int identity_class = 0;
};

class Group {
public:
  static constexpr int kTableThreshold = 4096;

  int order() const { return n_; }
  int identity() const { return 0; }
  const std::vector<int>& generator_ids() const { return gen_ids_; }

  int mult(int a, int b) const {
    if (!table_.empty()) return (int)table_[(size_t)a * n_ + b];
    return lazy_mult_(a, b);
  }
  int inverse(int a) const { return inverse_[a]; }
  int conj(int g, int a) const { return mult(mult(g, a), inverse_[g]); }

  int element_order(int a) const;
  long long exponent() const;

  std::string element_encoding(int a) const { return encode_fn_(a); }
  std::string element_name(int a) const { return name_fn_(a); }

  const ConjugacyClasses& classes() const;

  // Deterministic description used in reports ("closure of 2 generators").
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

private:
  Group() = default;
  template <class Law>
  friend struct ClosureBuilder;

  int n_ = 0;
  std::vector<int> gen_ids_;
  std::vector<uint32_t> table_;  // dense when n <= kTableThreshold
  std::function<int(int, int)> lazy_mult_;
  std::vector<int> inverse_;
  std::function<std::string(int)> encode_fn_;
  std::function<std::string(int)> name_fn_;
  std::string label_ = "group";

  mutable std::mutex cache_mutex_;
  mutable std::unique_ptr<ConjugacyClasses> classes_cache_;
  mutable std::vector<int> order_cache_;
};

struct ClosureOptions {
  size_t cap = 1000000;
  std::string label = "group";
};

template <class Law>
struct ClosureResult {
  GroupPtr group;
  std::vector<typename Law::Element> elements;  // indexed by element id
};

template <class Law>
struct ClosureBuilder {
  using Element = typename Law::Element;

  static ClosureResult<Law> run(const Law& law, std::vector<Element> gens,
                                const ClosureOptions& opt) {
    for (const auto& g : gens) law.validate_generator(g);

    std::vector<std::pair<std::string, Element>> keyed;
    keyed.reserve(gens.size());
    for (auto& g : gens) {
      std::string k = law.encode(g);
      keyed.emplace_back(std::move(k), std::move(g));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());

    auto elements = std::make_shared<std::vector<Element>>();
    std::unordered_map<std::string, int> index;
    elements->push_back(law.identity());
    index.emplace(law.encode(elements->front()), 0);

    std::vector<Element> gen_elems;
    std::string id_key = law.encode(elements->front());
    for (auto& [key, g] : keyed)
      if (key != id_key) gen_elems.push_back(std::move(g));
    size_t ngens = gen_elems.size();

    // gen_cols[j][x] = id of elements[x] * gen_elems[j]; every product the
    // BFS performs lands here, which is all the table construction needs.
    std::vector<std::vector<int>> gen_cols(ngens);
    std::vector<int> parent, via;
    parent.push_back(-1);
    via.push_back(-1);

    for (size_t qi = 0; qi < elements->size(); ++qi) {
      for (size_t j = 0; j < ngens; ++j) {
        Element y = law.mult((*elements)[qi], gen_elems[j]);
        std::string key = law.encode(y);
        auto it = index.find(key);
        int yid;
        if (it == index.end()) {
          if (elements->size() >= opt.cap) throw std::runtime_error("closure cap");
          yid = (int)elements->size();
          elements->push_back(std::move(y));
          index.emplace(std::move(key), yid);
          parent.push_back((int)qi);
          via.push_back((int)j);
        } else {
          yid = it->second;
        }
        gen_cols[j].push_back(yid);  // position qi
      }
    }

    int n = (int)elements->size();
    auto grp = std::shared_ptr<Group>(new Group());
    grp->n_ = n;
    grp->label_ = opt.label;
    for (size_t j = 0; j < ngens; ++j) {
      auto it = index.find(law.encode(gen_elems[j]));
      grp->gen_ids_.push_back(it->second);
    }

    if (n <= Group::kTableThreshold) {
      grp->table_.assign((size_t)n * n, 0);
      for (int x = 0; x < n; ++x) grp->table_[(size_t)x * n + 0] = (uint32_t)x;
      for (int i = 1; i < n; ++i) {
        int p = parent[i], j = via[i];
        for (int x = 0; x < n; ++x)
          grp->table_[(size_t)x * n + i] =
              (uint32_t)gen_cols[j][grp->table_[(size_t)x * n + p]];
      }
      grp->inverse_.assign(n, -1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (grp->table_[(size_t)x * n + y] == 0) {
            grp->inverse_[x] = y;
            break;
          }
    } else {
      Law law_copy = law;
      auto idx = std::make_shared<std::unordered_map<std::string, int>>(std::move(index));
      grp->lazy_mult_ = [law_copy, elements, idx](int a, int b) {
        auto it = idx->find(law_copy.encode(law_copy.mult((*elements)[a], (*elements)[b])));
        if (it == idx->end()) throw std::logic_error("closure violated");
        return it->second;
      };
      grp->inverse_.assign(n, 0);
      for (int x = 1; x < n; ++x) {
        // walk x, x^2, ... until the identity; the previous power is x^-1
        int prev = x, cur = grp->lazy_mult_(x, x);
        while (cur != 0) {
          prev = cur;
          cur = grp->lazy_mult_(cur, x);
        }
        grp->inverse_[x] = prev;
      }
    }

    Law law_copy2 = law;
    grp->encode_fn_ = [law_copy2, elements](int a) { return law_copy2.encode((*elements)[a]); };
    Law law_copy3 = law;
    grp->name_fn_ = [law_copy3, elements](int a) { return law_copy3.name((*elements)[a]); };

    ClosureResult<Law> result;
    result.group = grp;
    result.elements = *elements;
    return result;
  }
};

template <class Law>
ClosureResult<Law> close_group(const Law& law, std::vector<typename Law::Element> gens,
                               ClosureOptions opt = {}) {
  return ClosureBuilder<Law>::run(law, std::move(gens), opt);
}

}  // namespace polyrep
