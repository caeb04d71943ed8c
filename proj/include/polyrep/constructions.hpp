#pragma once

// Every explicit construction the verification suite needs: reference
// permutation groups, matrix groups over residue rings, the quaternion
// model of the binary octahedral group, the Heisenberg matrices and their
// projective image, torus point orders, the monomial map psi, the
// weighted-projective maps phi_n, the GL2(Z/4Z) analysis and the
// polyhedral-extension catalog.

#include <array>

#include "polyrep/exact_matrix.hpp"
#include "polyrep/group_ops.hpp"
#include "polyrep/isomorphism.hpp"
#include "polyrep/laws.hpp"

namespace polyrep {

// ---- reference groups -------------------------------------------------

GroupPtr cyclic_group(int n);
GroupPtr symmetric3();
GroupPtr alternating4();
GroupPtr symmetric4();
GroupPtr alternating5();
GroupPtr quaternion8();
GroupPtr klein_four();
GroupPtr elementary_vector_group(int modulus, int rank);  // (Z/m)^rank additive
GroupPtr sl2_mod(int m);  // closure of the elementary matrices
GroupPtr gl2_mod(int m);  // SL2 generators plus diag(1, m-1)
GroupPtr binary_octahedral();  // 2x2 matrices over Q(zeta_8), quaternion model

// Closures with their element lists, for callers that need matrix <-> id maps.
ClosureResult<ResidueMatrixLaw> sl2_mod_closure(int m);
ClosureResult<ResidueMatrixLaw> gl2_mod_closure(int m);

// ---- Heisenberg matrices and their projective image --------------------

struct HeisenbergData {
  int p = 0;
  ExactMatrix P, D, F, V;            // conductor p
  bool relations_ok = false;         // all six matrix relations, exact
  bool span_ok = false;              // the p^2 matrices P^a D^b are independent
  std::array<std::array<int, 2>, 2> rho_f{}, rho_v{};  // conjugation images mod p
  bool rho_matches_paper = false;
  GroupPtr image;                    // projective closure of {P, D, V, F}
  long long image_order = 0;
  EmbeddedGroup image_n;             // the (C_p)^2 inside the image
};

// Guard: p odd prime; p^2 |SL_2(F_p)| <= 10^4 unless allow_large.
HeisenbergData heisenberg_verify(int p, bool allow_large = false);

// ---- torus point orders ------------------------------------------------

enum class TorusForm { split, circle, x2_plus_3y2 };

// Order of (x, y) under the group law of the form's 2x2 matrix model
// (1x1 for the split torus).  Throws when the point is not on the curve
// or has no small finite order.
int torus_point_order(TorusForm form, const Rational& x, const Rational& y);

// ---- monomial map psi and weighted projective maps phi_n ---------------

// 3x3 monomial input = P_perm * diag(lambda); output is the 6x6 monomial
// action on the ratio coordinates; scalar matrices map to the identity.
ExactMatrix monomial_psi(const ExactMatrix& monomial3);
ExactMatrix monomial_matrix(const std::array<Cyclotomic, 3>& diag,
                            const std::array<int, 3>& perm);

ExactMatrix symmetric_square(const ExactMatrix& a2x2);
// n odd: det(A)^((-n-1)/2) (A (x) B); n even: det(A)^(-n/2-1) (sym2(A) (x) B).
ExactMatrix wps_phi(int n, int m, const ExactMatrix& a, const ExactMatrix& b);

// ---- GL2(Z/4Z) structure ------------------------------------------------

struct Gl2z4Report {
  GroupPtr gl2z4;
  GroupPtr sl2z4;
  std::vector<std::pair<std::string, bool>> assertions;  // all true or throw
};

Gl2z4Report gl2z4_structure();

// ---- polyhedral extension catalog ---------------------------------------

enum class NType { trivial, c2, c2c2 };
enum class PType { a4, s4, a5 };

std::string ntype_name(NType n);
std::string ptype_name(PType p);
GroupPtr reference_polyhedral(PType p);

struct ExtensionRecord {
  std::string name;
  NType n_type{};
  PType p_type{};
  long long expected_order = 0;
  long long paper_rdim_q = 0;
  long long paper_rdim_k = 0;
  GroupPtr group;
  Fingerprint fp;
  bool extension_verified = false;
  // filled by the rdim audit layer
  long long rdim_split_value = -1;
  long long rdim_rational_lower_value = -1;
};

// Builds the named catalog group; throws on unknown name.
GroupPtr build_catalog_group(const std::string& name);

// All records for a block (or all blocks), built from the fixture rows,
// each checked for order and the extension property.  Throws naming the
// record on any failure.
std::vector<ExtensionRecord> polyhedral_catalog(bool all, NType n = NType::trivial,
                                                PType p = PType::a4);

// True iff some normal subgroup of g isomorphic to the N-type has quotient
// isomorphic to the P-type.
bool verify_extension(const GroupPtr& g, NType n, PType p);

// Orders of the preimages of the transposition class of G/<z>, where z is
// the designated central involution; used to separate the two stem covers.
std::vector<int> transposition_preimage_orders(const GroupPtr& g);

}  // namespace polyrep
