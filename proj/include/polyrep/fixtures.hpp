#pragma once

// Bundled reference tables; the one place the
// suite compares computed values against.

#include <string>
#include <vector>

namespace polyrep {

struct Table1Row {
  int n;
  std::string lattice;   // build_lattice name
  int b_rank;            // 0 except for the B family
  std::string weyl;      // printed Weyl group column
  std::string omega;     // "roots" / "short roots" / "spinors"
  long long omega_size;  // = symrank value
  int modulus;
};

const std::vector<Table1Row>& table1_reference();

struct Table2Row {
  std::string n_type;  // "1", "C2", "C2^2"
  std::string p_type;  // "A4", "S4", "A5"
  std::string name;    // record name used by the builders
  long long order;
  long long rdim_q;    // printed rational column
  long long rdim_k;    // printed worst-case upper bound column
};

const std::vector<Table2Row>& table2_reference();

struct C3Constants {
  long long lower = 15;
  long long upper = 62208;
  long long index_bound = 10368;
  long long abelian_rank_bound = 6;
};

const C3Constants& c3_constants();

}  // namespace polyrep
