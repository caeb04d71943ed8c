#pragma once

// Multiplication laws feeding close_group: exact matrices, projective
// matrices (canonical form after every product), residue matrices,
// permutations, additive residue vectors, semidirect pairs, parent-id
// subgroups and cosets.

#include <utility>

#include "polyrep/exact_matrix.hpp"
#include "polyrep/group.hpp"
#include "polyrep/residue_matrix.hpp"

namespace polyrep {

inline void append_int32(std::string& out, long long v) {
  for (int i = 0; i < 4; ++i) out.push_back((char)((unsigned long long)v >> (8 * i) & 0xff));
}

struct ExactMatrixLaw {
  using Element = ExactMatrix;
  int dim;
  long long conductor;

  Element identity() const { return ExactMatrix::identity(dim, conductor); }
  Element mult(const Element& a, const Element& b) const { return a * b; }
  std::string encode(const Element& a) const { return a.encoding(); }
  std::string name(const Element& a) const { return a.str(); }
  void validate_generator(const Element& a) const {
    if (a.rows() != dim || a.cols() != dim || a.conductor() != conductor)
      throw std::invalid_argument("generator shape/conductor mismatch");
    (void)a.inverse();  // throws "not invertible" on a singular generator
  }
};

struct ProjectiveMatrixLaw {
  using Element = ExactMatrix;
  int dim;
  long long conductor;

  Element identity() const { return ExactMatrix::identity(dim, conductor); }
  Element mult(const Element& a, const Element& b) const { return canonical_projective(a * b); }
  std::string encode(const Element& a) const { return a.encoding(); }
  std::string name(const Element& a) const { return a.str(); }
  void validate_generator(const Element& a) const {
    if (a.rows() != dim || a.cols() != dim || a.conductor() != conductor)
      throw std::invalid_argument("generator shape/conductor mismatch");
    (void)a.inverse();
    if (a != canonical_projective(a))
      throw std::invalid_argument("projective generator must be in canonical form");
  }
};

struct ResidueMatrixLaw {
  using Element = ResidueMatrix;
  int dim;
  int modulus;

  Element identity() const { return ResidueMatrix::identity(modulus, dim); }
  Element mult(const Element& a, const Element& b) const { return a * b; }
  std::string encode(const Element& a) const { return a.encoding(); }
  std::string name(const Element& a) const { return a.str(); }
  void validate_generator(const Element& a) const {
    if (a.rows() != dim || a.cols() != dim || a.modulus() != modulus)
      throw std::invalid_argument("generator shape/modulus mismatch");
    if (!a.is_invertible()) throw std::domain_error("not invertible");
  }
};

struct PermutationLaw {
  using Element = std::vector<int>;  // images of 0..degree-1
  int degree;

  Element identity() const {
    Element e(degree);
    for (int i = 0; i < degree; ++i) e[i] = i;
    return e;
  }
  Element mult(const Element& a, const Element& b) const {
    // apply a first, then b
    Element out(degree);
    for (int i = 0; i < degree; ++i) out[i] = b[a[i]];
    return out;
  }
  std::string encode(const Element& a) const {
    std::string s;
    for (int v : a) append_int32(s, v);
    return s;
  }
  std::string name(const Element& a) const {
    std::string s = "perm[";
    for (int i = 0; i < degree; ++i) s += std::to_string(a[i]) + (i + 1 < degree ? " " : "");
    return s + "]";
  }
  void validate_generator(const Element& a) const {
    if ((int)a.size() != degree) throw std::invalid_argument("permutation degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : a) {
      if (v < 0 || v >= degree || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }
};

// (Z/mZ)^n under addition; the natural home of the C4^2 / C2^2 kernels.
struct ResidueVectorLaw {
  using Element = std::vector<int>;
  int modulus;
  int rank;

  Element identity() const { return Element(rank, 0); }
  Element mult(const Element& a, const Element& b) const {
    Element out(rank);
    for (int i = 0; i < rank; ++i) out[i] = (a[i] + b[i]) % modulus;
    return out;
  }
  std::string encode(const Element& a) const {
    std::string s;
    for (int v : a) append_int32(s, v);
    return s;
  }
  std::string name(const Element& a) const {
    std::string s = "(";
    for (int i = 0; i < rank; ++i) s += std::to_string(a[i]) + (i + 1 < rank ? "," : "");
    return s + ")";
  }
  void validate_generator(const Element& a) const {
    if ((int)a.size() != rank) throw std::invalid_argument("vector rank mismatch");
    for (int v : a)
      if (v < 0 || v >= modulus) throw std::invalid_argument("entry not reduced");
  }
};

// Elements are ids of a parent group; used for subgroups.  The law keeps
// the parent alive because it is copied into the subgroup's closures.
struct ParentIdLaw {
  using Element = int;
  GroupPtr parent;

  Element identity() const { return parent->identity(); }
  Element mult(Element a, Element b) const { return parent->mult(a, b); }
  std::string encode(Element a) const {
    std::string s;
    append_int32(s, a);
    return s;
  }
  std::string name(Element a) const { return parent->element_name(a); }
  void validate_generator(Element a) const {
    if (a < 0 || a >= parent->order()) throw std::invalid_argument("id out of range");
  }
};

// Pairs (n, h) with multiplication twisted by an action of H on N.
struct SemidirectLaw {
  using Element = std::pair<int, int>;
  GroupPtr n_group;
  GroupPtr h_group;
  std::shared_ptr<const std::vector<std::vector<int>>> action;  // h id -> perm of N ids

  Element identity() const { return {0, 0}; }
  Element mult(const Element& a, const Element& b) const {
    return {n_group->mult(a.first, (*action)[a.second][b.first]),
            h_group->mult(a.second, b.second)};
  }
  std::string encode(const Element& a) const {
    std::string s;
    append_int32(s, a.first);
    append_int32(s, a.second);
    return s;
  }
  std::string name(const Element& a) const {
    return "(" + n_group->element_name(a.first) + ";" + h_group->element_name(a.second) + ")";
  }
  void validate_generator(const Element& a) const {
    if (a.first < 0 || a.first >= n_group->order() || a.second < 0 ||
        a.second >= h_group->order())
      throw std::invalid_argument("pair out of range");
  }
};

// Cosets of a normal subgroup, interned by their sorted member tuple.
struct CosetLaw {
  using Element = int;  // index into *cosets
  GroupPtr parent;
  std::shared_ptr<const std::vector<std::vector<int>>> cosets;  // sorted member ids
  std::shared_ptr<const std::vector<int>> coset_of;             // parent id -> coset index

  Element identity() const { return (*coset_of)[0]; }
  Element mult(Element a, Element b) const {
    return (*coset_of)[parent->mult((*cosets)[a][0], (*cosets)[b][0])];
  }
  std::string encode(Element a) const {
    std::string s;
    for (int v : (*cosets)[a]) append_int32(s, v);
    return s;
  }
  std::string name(Element a) const {
    return "coset(" + parent->element_name((*cosets)[a][0]) + ")";
  }
  void validate_generator(Element a) const {
    if (a < 0 || a >= (int)cosets->size()) throw std::invalid_argument("coset out of range");
  }
};

}  // namespace polyrep
