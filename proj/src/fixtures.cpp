#include "polyrep/fixtures.hpp"

namespace polyrep {

const std::vector<Table1Row>& table1_reference() {
  static const std::vector<Table1Row> rows = {
      {1, "A1", 0, "2", "roots", 2, 4},
      {2, "G2", 0, "D12", "short roots", 6, 4},
      {3, "A3", 0, "S4", "roots", 12, 4},
      {4, "F4", 0, "W(F4)", "short roots", 24, 4},
      {5, "D5", 0, "2^4 : S5", "roots", 40, 4},
      {6, "E6", 0, "W(E6)", "roots", 72, 3},
      {7, "B", 7, "2^7 : S7", "spinors", 128, 4},
      {8, "B", 8, "2^8 : S8", "spinors", 256, 4},
  };
  return rows;
}

const std::vector<Table2Row>& table2_reference() {
  static const std::vector<Table2Row> rows = {
      {"1", "A4", "A4", 12, 3, 3},
      {"1", "S4", "S4", 24, 3, 3},
      {"1", "A5", "A5", 60, 4, 3},

      {"C2", "A4", "A4 x C2", 24, 3, 3},
      {"C2", "A4", "Atilde4", 24, 4, 2},
      {"C2", "S4", "S4 x C2", 48, 3, 3},
      {"C2", "S4", "Stilde4+", 48, 4, 4},
      {"C2", "S4", "Stilde4-", 48, 8, 4},
      {"C2", "S4", "SL2(Z/4)", 48, 5, 5},
      {"C2", "A5", "A5 x C2", 120, 4, 3},
      {"C2", "A5", "Atilde5", 120, 4, 2},

      {"C2^2", "A4", "A4 x C2^2", 48, 4, 4},
      {"C2^2", "A4", "Atilde4 x C2", 48, 4, 3},
      {"C2^2", "A4", "C2^2 : A4", 48, 6, 6},
      {"C2^2", "A4", "C4^2 : C3", 48, 3, 6},
      {"C2^2", "S4", "S4 x C2^2", 96, 4, 4},
      {"C2^2", "S4", "Stilde4+ x C2", 96, 5, 5},
      {"C2^2", "S4", "Stilde4- x C2", 96, 9, 5},
      {"C2^2", "S4", "SL2(Z/4) x C2", 96, 5, 6},
      {"C2^2", "S4", "Atilde4 : C4", 96, 6, 6},
      {"C2^2", "S4", "Stilde4+ : C2", 96, 8, 4},
      {"C2^2", "S4", "GL2(Z/4)", 96, 5, 5},
      {"C2^2", "S4", "C2^2 : S4", 96, 6, 6},
      {"C2^2", "S4", "C4^2 : S3", 96, 6, 6},
      {"C2^2", "A5", "A5 x C2^2", 240, 5, 4},
      {"C2^2", "A5", "Atilde5 x C2", 240, 5, 3},
  };
  return rows;
}

const C3Constants& c3_constants() {
  static const C3Constants c;
  return c;
}

}  // namespace polyrep
