#include <algorithm>
#include <iterator>
#include <map>

#include "polyrep/constructions.hpp"
#include "polyrep/fixtures.hpp"
#include "polyrep/laws.hpp"

// Builders for every Table-2 record.  The recipes are checkable: a wrong
// guess fails the order or extension test loudly.

namespace polyrep {

std::string ntype_name(NType n) {
  switch (n) {
    case NType::trivial: return "1";
    case NType::c2: return "C2";
    case NType::c2c2: return "C2^2";
  }
  throw std::logic_error("unreachable");
}

std::string ptype_name(PType p) {
  switch (p) {
    case PType::a4: return "A4";
    case PType::s4: return "S4";
    case PType::a5: return "A5";
  }
  throw std::logic_error("unreachable");
}

GroupPtr reference_polyhedral(PType p) {
  switch (p) {
    case PType::a4: return alternating4();
    case PType::s4: return symmetric4();
    case PType::a5: return alternating5();
  }
  throw std::logic_error("unreachable");
}

namespace {

NType parse_ntype(const std::string& s) {
  if (s == "1") return NType::trivial;
  if (s == "C2") return NType::c2;
  if (s == "C2^2") return NType::c2c2;
  throw std::invalid_argument("unknown N type: " + s);
}

PType parse_ptype(const std::string& s) {
  if (s == "A4") return PType::a4;
  if (s == "S4") return PType::s4;
  if (s == "A5") return PType::a5;
  throw std::invalid_argument("unknown P type: " + s);
}

// --- helpers for explicit actions ---------------------------------------

struct VecGroup {
  GroupPtr group;
  std::vector<std::vector<int>> vec_of;
  std::map<std::vector<int>, int> id_of;
};

VecGroup vec_group(int modulus, int rank) {
  ResidueVectorLaw law{modulus, rank};
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  ClosureOptions opt;
  opt.label = "(Z/" + std::to_string(modulus) + ")^" + std::to_string(rank);
  auto res = close_group(law, std::move(gens), opt);
  VecGroup out;
  out.group = res.group;
  out.vec_of = res.elements;
  for (int i = 0; i < (int)res.elements.size(); ++i) out.id_of.emplace(res.elements[i], i);
  return out;
}

std::vector<int> matrix_action_perm(const VecGroup& n, const ResidueMatrix& m) {
  std::vector<int> perm(n.group->order());
  for (int i = 0; i < n.group->order(); ++i) {
    const auto& v = n.vec_of[i];
    std::vector<int> image(v.size());
    for (int r = 0; r < (int)v.size(); ++r) {
      long long acc = 0;
      for (int c = 0; c < (int)v.size(); ++c) acc += (long long)m.at(r, c) * v[c];
      image[r] = (int)(acc % m.modulus());
    }
    perm[i] = n.id_of.at(image);
  }
  return perm;
}

// mod-2 matrix of a permutation of {0,1,2} acting on the labels
// v0=(1,0), v1=(0,1), v2=(1,1)
ResidueMatrix gl2f2_of_perm3(const std::array<int, 3>& tau) {
  auto vec = [](int label) -> std::pair<int, int> {
    if (label == 0) return {1, 0};
    if (label == 1) return {0, 1};
    return {1, 1};
  };
  auto [a, c] = vec(tau[0]);
  auto [b, d] = vec(tau[1]);
  return ResidueMatrix(2, 2, 2, {a, b, c, d});
}

// C2^2 : A4 and C2^2 : S4, with the action through the quotient by the
// Klein subgroup of the polyhedral group.
ProductGroup klein_semidirect(PType ptype, const std::string& label) {
  VecGroup n = vec_group(2, 2);
  PermutationLaw plaw{4};
  ClosureOptions opt;
  opt.label = ptype_name(ptype);
  auto h = ptype == PType::a4
               ? close_group(plaw, {{1, 2, 0, 3}, {0, 2, 3, 1}}, opt)
               : close_group(plaw, {{1, 2, 3, 0}, {1, 0, 2, 3}}, opt);
  std::vector<std::vector<int>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

  std::vector<std::vector<int>> action(h.group->order());
  for (int hid = 0; hid < h.group->order(); ++hid) {
    const std::vector<int>& sigma = h.elements[hid];
    // unique Klein translate fixing the point 3
    std::array<int, 3> tau{};
    bool found = false;
    for (const auto& v : klein) {
      std::vector<int> t = plaw.mult(sigma, v);
      if (t[3] == 3) {
        tau = {t[0], t[1], t[2]};
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no Klein translate fixes the point");
    ResidueMatrix m = gl2f2_of_perm3(tau).inverse();
    action[hid] = matrix_action_perm(n, m);
  }
  return product_group(ProductKind::semidirect, n.group, h.group, std::move(action), label);
}

// The Klein kernel of GL2(Z/4Z) contains the central -I, so the
// conjugation action of the S4 complement factors through the sign map.
// This is the semidirect structure the GL2(Z/4Z) decomposition exhibits;
// it is NOT isomorphic to the faithful-action group "C2^2 : S4" above
// (their centers differ), even though both are written C2^2 : S4.
ProductGroup klein_sign_semidirect_s4() {
  VecGroup n = vec_group(2, 2);
  PermutationLaw plaw{4};
  ClosureOptions opt;
  opt.label = "S4";
  auto h = close_group(plaw, {{1, 2, 3, 0}, {1, 0, 2, 3}}, opt);
  ResidueMatrix swap01(2, 2, 2, {0, 1, 1, 0});
  ResidueMatrix ident = ResidueMatrix::identity(2, 2);
  std::vector<std::vector<int>> action(h.group->order());
  for (int hid = 0; hid < h.group->order(); ++hid) {
    const std::vector<int>& sigma = h.elements[hid];
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    action[hid] = matrix_action_perm(n, inversions % 2 ? swap01 : ident);
  }
  return product_group(ProductKind::semidirect, n.group, h.group, std::move(action),
                       "C2^2 : S4 (sign action)");
}

ProductGroup c4sq_semidirect_c3() {
  VecGroup n = vec_group(4, 2);
  GroupPtr c3 = cyclic_group(3);
  ResidueMatrix h(4, 2, 2, {3, 3, 1, 0});
  std::vector<std::vector<int>> action(3);
  for (int k = 0; k < 3; ++k) {
    ResidueMatrix hk = ResidueMatrix::identity(4, 2);
    // element k of C3 is the k-th power of the cycle only up to id order;
    // map by element order: id 0 -> h^0, generator id -> h^1, square -> h^2
    int power = 0;
    if (k != 0) power = c3->mult(c3->generator_ids()[0], c3->generator_ids()[0]) == k ? 2 : 1;
    for (int t = 0; t < power; ++t) hk = hk * h;
    action[k] = matrix_action_perm(n, hk);
  }
  return product_group(ProductKind::semidirect, n.group, c3, std::move(action), "C4^2 : C3");
}

ProductGroup c4sq_semidirect_s3() {
  VecGroup n = vec_group(4, 2);
  ResidueMatrixLaw law{2, 4};
  ResidueMatrix t(4, 2, 2, {0, 1, 1, 0});
  ResidueMatrix h(4, 2, 2, {3, 3, 1, 0});
  ClosureOptions opt;
  opt.label = "S3 (mod-4 matrices)";
  auto res = close_group(law, {t, h}, opt);
  if (res.group->order() != 6) throw std::logic_error("matrix S3 closure is not 6");
  std::vector<std::vector<int>> action(res.group->order());
  for (int hid = 0; hid < res.group->order(); ++hid)
    action[hid] = matrix_action_perm(n, res.elements[hid]);
  return product_group(ProductKind::semidirect, n.group, res.group, std::move(action),
                       "C4^2 : S3");
}

ProductGroup atilde4_semidirect_c4() {
  auto sl = sl2_mod_closure(3);
  GroupPtr c4 = cyclic_group(4);
  std::map<std::string, int> id_of;
  for (int i = 0; i < (int)sl.elements.size(); ++i) id_of.emplace(sl.elements[i].encoding(), i);
  ResidueMatrix t(3, 2, 2, {1, 0, 0, 2});  // diag(1, -1) in GL2(F3)
  ResidueMatrix tinv = t.inverse();

  std::vector<int> conj_perm(sl.group->order());
  for (int i = 0; i < sl.group->order(); ++i)
    conj_perm[i] = id_of.at((t * sl.elements[i] * tinv).encoding());
  std::vector<int> idperm(sl.group->order());
  for (int i = 0; i < sl.group->order(); ++i) idperm[i] = i;

  std::vector<std::vector<int>> action(4);
  for (int k = 0; k < 4; ++k) {
    int ord = c4->element_order(k);
    action[k] = (ord == 4) ? conj_perm : idperm;  // generator acts, squares act trivially
  }
  return product_group(ProductKind::semidirect, sl.group, c4, std::move(action), "Atilde4 : C4");
}

ProductGroup stilde4p_semidirect_c2() {
  auto gl = gl2_mod_closure(3);
  GroupPtr c2 = cyclic_group(2);
  std::map<std::string, int> id_of;
  for (int i = 0; i < (int)gl.elements.size(); ++i) id_of.emplace(gl.elements[i].encoding(), i);
  std::vector<int> det_twist(gl.group->order());
  for (int i = 0; i < gl.group->order(); ++i) {
    const ResidueMatrix& m = gl.elements[i];
    int det = m.determinant();
    ResidueMatrix dm(3, 2, 2,
                     {(long long)det * m.at(0, 0), (long long)det * m.at(0, 1),
                      (long long)det * m.at(1, 0), (long long)det * m.at(1, 1)});
    det_twist[i] = id_of.at(dm.encoding());
  }
  std::vector<int> idperm(gl.group->order());
  for (int i = 0; i < gl.group->order(); ++i) idperm[i] = i;
  std::vector<std::vector<int>> action = {idperm, det_twist};
  return product_group(ProductKind::semidirect, gl.group, c2, std::move(action), "Stilde4+ : C2");
}

GroupPtr direct(const GroupPtr& a, const GroupPtr& b, const std::string& label) {
  return product_group(ProductKind::direct, a, b, {}, label).group;
}

}  // namespace

// A4 : C4 with the C4 generator acting as conjugation by a transposition;
// used for the SL2(Z/4) identification.
static ProductGroup a4_semidirect_c4_transposition() {
  PermutationLaw plaw{4};
  ClosureOptions opt;
  opt.label = "A4";
  auto a4 = close_group(plaw, {{1, 2, 0, 3}, {0, 2, 3, 1}}, opt);
  GroupPtr c4 = cyclic_group(4);
  std::map<std::string, int> id_of;
  for (int i = 0; i < (int)a4.elements.size(); ++i)
    id_of.emplace(plaw.encode(a4.elements[i]), i);
  std::vector<int> t = {1, 0, 2, 3};
  std::vector<int> conj_perm(a4.group->order()), idperm(a4.group->order());
  for (int i = 0; i < a4.group->order(); ++i) {
    conj_perm[i] = id_of.at(plaw.encode(plaw.mult(plaw.mult(t, a4.elements[i]), t)));
    idperm[i] = i;
  }
  std::vector<std::vector<int>> action(4);
  for (int k = 0; k < 4; ++k) action[k] = c4->element_order(k) == 4 ? conj_perm : idperm;
  return product_group(ProductKind::semidirect, a4.group, c4, std::move(action), "A4 : C4");
}

GroupPtr build_catalog_group(const std::string& name) {
  if (name == "A4") return alternating4();
  if (name == "S4") return symmetric4();
  if (name == "A5") return alternating5();
  if (name == "A4 x C2") return direct(alternating4(), cyclic_group(2), name);
  if (name == "Atilde4") return sl2_mod(3);
  if (name == "S4 x C2") return direct(symmetric4(), cyclic_group(2), name);
  if (name == "Stilde4+") return gl2_mod(3);
  if (name == "Stilde4-") return binary_octahedral();
  if (name == "SL2(Z/4)") return sl2_mod(4);
  if (name == "A5 x C2") return direct(alternating5(), cyclic_group(2), name);
  if (name == "Atilde5") return sl2_mod(5);
  if (name == "A4 x C2^2") return direct(alternating4(), klein_four(), name);
  if (name == "Atilde4 x C2") return direct(sl2_mod(3), cyclic_group(2), name);
  if (name == "C2^2 : A4") return klein_semidirect(PType::a4, name).group;
  if (name == "C4^2 : C3") return c4sq_semidirect_c3().group;
  if (name == "S4 x C2^2") return direct(symmetric4(), klein_four(), name);
  if (name == "Stilde4+ x C2") return direct(gl2_mod(3), cyclic_group(2), name);
  if (name == "Stilde4- x C2") return direct(binary_octahedral(), cyclic_group(2), name);
  if (name == "SL2(Z/4) x C2") return direct(sl2_mod(4), cyclic_group(2), name);
  if (name == "Atilde4 : C4") return atilde4_semidirect_c4().group;
  if (name == "Stilde4+ : C2") return stilde4p_semidirect_c2().group;
  if (name == "GL2(Z/4)") return gl2_mod(4);
  if (name == "C2^2 : S4") return klein_semidirect(PType::s4, name).group;
  if (name == "C4^2 : S3") return c4sq_semidirect_s3().group;
  if (name == "A5 x C2^2") return direct(alternating5(), klein_four(), name);
  if (name == "Atilde5 x C2") return direct(sl2_mod(5), cyclic_group(2), name);
  throw std::invalid_argument("unknown catalog group: " + name);
}

bool verify_extension(const GroupPtr& g, NType n, PType p) {
  if (g->order() > 10000) throw std::invalid_argument("verify_extension capped at order 10^4");
  GroupPtr ref = reference_polyhedral(p);
  if (n == NType::trivial) return is_isomorphic(g, ref).isomorphic;

  long long quotient_order = ref->order();
  long long n_order = n == NType::c2 ? 2 : 4;
  if (g->order() != n_order * quotient_order) return false;

  std::vector<int> involutions;
  for (int x = 1; x < g->order(); ++x)
    if (g->element_order(x) == 2) involutions.push_back(x);

  std::vector<std::vector<int>> candidates;
  if (n == NType::c2) {
    auto center = center_ids(*g);
    for (int z : center)
      if (z != 0 && g->element_order(z) == 2) candidates.push_back({0, z});
  } else {
    std::vector<std::vector<int>> seen;
    for (size_t i = 0; i < involutions.size(); ++i)
      for (size_t j = i + 1; j < involutions.size(); ++j) {
        int a = involutions[i], b = involutions[j];
        if (g->mult(a, b) != g->mult(b, a)) continue;
        std::vector<int> s = {0, a, b, g->mult(a, b)};
        std::sort(s.begin(), s.end());
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        if (is_normal(*g, s)) candidates.push_back(s);
      }
  }

  for (const auto& cand : candidates) {
    auto q = quotient_group(g, cand);
    if (q.group->order() != quotient_order) continue;
    if (is_isomorphic(q.group, ref).isomorphic) return true;
  }
  return false;
}

std::vector<int> transposition_preimage_orders(const GroupPtr& g) {
  auto center = center_ids(*g);
  for (int z : center) {
    if (z == 0 || g->element_order(z) != 2) continue;
    auto q = quotient_group(g, {0, z});
    if (q.group->order() != 24) continue;
    if (!is_isomorphic(q.group, symmetric4()).isomorphic) continue;
    const auto& cc = q.group->classes();
    int transposition_class = -1;
    for (size_t k = 0; k < cc.members.size(); ++k)
      if (cc.members[k].size() == 6 && q.group->element_order(cc.reps[k]) == 2)
        transposition_class = (int)k;
    if (transposition_class < 0) continue;
    std::vector<int> orders;
    for (int x = 0; x < g->order(); ++x)
      if (cc.class_of[q.projection[x]] == transposition_class)
        orders.push_back(g->element_order(x));
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
  }
  throw std::invalid_argument("no central involution with S4 quotient");
}

std::vector<ExtensionRecord> polyhedral_catalog(bool all, NType n, PType p) {
  std::vector<ExtensionRecord> records;
  for (const auto& row : table2_reference()) {
    NType rn = parse_ntype(row.n_type);
    PType rp = parse_ptype(row.p_type);
    if (!all && (rn != n || rp != p)) continue;
    ExtensionRecord rec;
    rec.name = row.name;
    rec.n_type = rn;
    rec.p_type = rp;
    rec.expected_order = row.order;
    rec.paper_rdim_q = row.rdim_q;
    rec.paper_rdim_k = row.rdim_k;
    rec.group = build_catalog_group(row.name);
    if (rec.group->order() != rec.expected_order)
      throw std::logic_error("catalog record " + rec.name + " has order " +
                             std::to_string(rec.group->order()) + ", expected " +
                             std::to_string(rec.expected_order));
    rec.fp = fingerprint(*rec.group);
    rec.extension_verified = verify_extension(rec.group, rn, rp);
    if (!rec.extension_verified)
      throw std::logic_error("catalog record " + rec.name + " failed the extension check");
    records.push_back(std::move(rec));
  }

  // records within one (N, P) block must be pairwise non-isomorphic
  for (size_t i = 0; i < records.size(); ++i)
    for (size_t j = i + 1; j < records.size(); ++j) {
      if (records[i].n_type != records[j].n_type || records[i].p_type != records[j].p_type)
        continue;
      if (is_isomorphic(records[i].group, records[j].group).isomorphic)
        throw std::logic_error("catalog records " + records[i].name + " and " +
                               records[j].name + " are isomorphic");
    }
  return records;
}

Gl2z4Report gl2z4_structure() {
  Gl2z4Report rep;
  auto require = [&rep](const std::string& name, bool ok) {
    rep.assertions.emplace_back(name, ok);
    if (!ok) throw std::logic_error("GL2(Z/4Z) structure check failed: " + name);
  };

  auto gl = gl2_mod_closure(4);
  rep.gl2z4 = gl.group;
  require("|GL2(Z/4Z)| = 96", gl.group->order() == 96);
  std::map<std::string, int> id_of;
  for (int i = 0; i < (int)gl.elements.size(); ++i) id_of.emplace(gl.elements[i].encoding(), i);
  auto mat = [&id_of](long long a, long long b, long long c, long long d) {
    return id_of.at(ResidueMatrix(4, 2, 2, {a, b, c, d}).encoding());
  };

  auto h_sub = make_subgroup(gl.group, {mat(0, 1, 1, 0), mat(3, 3, 1, 0)}, "H");
  require("|H| = 6", (int)h_sub.member_set.size() == 6);
  require("H isomorphic to S3", is_isomorphic(h_sub.group, symmetric3()).isomorphic);

  std::vector<int> a_members = {0, mat(3, 0, 0, 3), mat(3, 2, 2, 1), mat(1, 2, 2, 3)};
  std::vector<int> b_members = {0, mat(1, 2, 2, 1), mat(3, 2, 0, 3), mat(3, 0, 2, 3)};
  auto a_sub = make_subgroup(gl.group, {a_members[1], a_members[2]}, "A");
  auto b_sub = make_subgroup(gl.group, {b_members[1], b_members[2]}, "B");
  std::vector<int> a_sorted = a_members, b_sorted = b_members;
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(b_sorted.begin(), b_sorted.end());
  require("A is the displayed four-element set", a_sub.member_set == a_sorted);
  require("B is the displayed four-element set", b_sub.member_set == b_sorted);
  require("A isomorphic to C2^2", is_isomorphic(a_sub.group, klein_four()).isomorphic);
  require("B isomorphic to C2^2", is_isomorphic(b_sub.group, klein_four()).isomorphic);

  bool commute = true;
  for (int a : a_members)
    for (int b : b_members)
      if (gl.group->mult(a, b) != gl.group->mult(b, a)) commute = false;
  require("A and B commute elementwise", commute);

  auto hb = make_subgroup(
      gl.group, {mat(0, 1, 1, 0), mat(3, 3, 1, 0), b_members[1], b_members[2]}, "HB");
  require("|HB| = 24", (int)hb.member_set.size() == 24);
  require("HB isomorphic to S4", is_isomorphic(hb.group, symmetric4()).isomorphic);

  bool normalized = true;
  for (int x : hb.member_set)
    for (int a : a_members)
      if (!std::binary_search(a_sorted.begin(), a_sorted.end(), gl.group->conj(x, a)))
        normalized = false;
  require("A is normalized by HB", normalized);

  std::vector<int> meet;
  std::set_intersection(a_sorted.begin(), a_sorted.end(), hb.member_set.begin(),
                        hb.member_set.end(), std::back_inserter(meet));
  require("A meets HB trivially", meet == std::vector<int>{0});

  // GL2(Z/4Z) decomposes as C2^2 : S4 through the decomposition
  // A : HB just verified; since -I in A is central the complement acts
  // through the sign map.  The faithful-action group of the same name is
  // a different catalog row, so also record the non-isomorphism.
  auto sign_s4 = klein_sign_semidirect_s4();
  require("GL2(Z/4Z) isomorphic to A : HB (sign action C2^2 : S4)",
          is_isomorphic(gl.group, sign_s4.group).isomorphic);
  auto faithful_s4 = klein_semidirect(PType::s4, "C2^2 : S4");
  require("GL2(Z/4Z) not isomorphic to the faithful-action C2^2 : S4",
          !is_isomorphic(gl.group, faithful_s4.group).isomorphic);

  auto sl = sl2_mod_closure(4);
  rep.sl2z4 = sl.group;
  require("|SL2(Z/4Z)| = 48", sl.group->order() == 48);
  auto a4c4 = a4_semidirect_c4_transposition();
  require("SL2(Z/4Z) isomorphic to A4 : C4",
          is_isomorphic(sl.group, a4c4.group).isomorphic);

  // the A4 normal subgroup and its order-8 quotient from the rdim argument
  auto n_sub = make_subgroup(gl.group, {mat(3, 3, 1, 0), mat(3, 2, 0, 3)}, "N");
  require("|N| = 12", (int)n_sub.member_set.size() == 12);
  require("N isomorphic to A4", is_isomorphic(n_sub.group, alternating4()).isomorphic);
  require("N is normal in GL2(Z/4Z)", is_normal(*gl.group, n_sub.member_set));
  auto q = quotient_group(gl.group, n_sub.member_set);
  bool has_order4 = false;
  for (int x = 0; x < q.group->order(); ++x)
    if (q.group->element_order(x) == 4) has_order4 = true;
  require("GL2(Z/4Z)/N has order 8 and is not C2^3",
          q.group->order() == 8 && has_order4);
  return rep;
}

}  // namespace polyrep
