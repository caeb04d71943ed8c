#include <sstream>

#include "polyrep/verify.hpp"

// Group recipe mini-language for the rdim subcommand: named atoms joined
// with "x" build direct products, e.g. "a4 x c2".

namespace polyrep {

namespace {

GroupPtr build_atom(const std::string& atom) {
  if (atom == "a4") return alternating4();
  if (atom == "s4") return symmetric4();
  if (atom == "a5") return alternating5();
  if (atom == "s3") return symmetric3();
  if (atom == "q8") return quaternion8();
  if (atom == "sl2_3") return sl2_mod(3);
  if (atom == "gl2_3") return gl2_mod(3);
  if (atom == "sl2_5") return sl2_mod(5);
  if (atom == "sl2_z4") return sl2_mod(4);
  if (atom == "gl2_z4") return gl2_mod(4);
  if (atom == "2o") return binary_octahedral();
  if (atom.size() > 1 && atom[0] == 'c') {
    int n = 0;
    for (size_t i = 1; i < atom.size(); ++i) {
      if (!isdigit((unsigned char)atom[i])) throw std::invalid_argument("bad atom: " + atom);
      n = n * 10 + (atom[i] - '0');
    }
    if (n < 1 || n > 128) throw std::invalid_argument("cyclic atom out of range (1..128)");
    return cyclic_group(n);
  }
  if (atom.rfind("heis_", 0) == 0) {
    int p = std::stoi(atom.substr(5));
    if (p != 3 && p != 5)
      throw std::invalid_argument(
          "heis_p supports p in {3, 5}; p = 7 exceeds the character-table cap");
    return heisenberg_verify(p).image;
  }
  throw std::invalid_argument("unknown atom: " + atom);
}

}  // namespace

GroupPtr build_recipe_group(const std::string& recipe) {
  std::vector<std::string> atoms;
  std::string token;
  std::istringstream in(recipe);
  while (in >> token) {
    if (token == "x") continue;
    for (auto& c : token) c = (char)tolower((unsigned char)c);
    atoms.push_back(token);
  }
  if (atoms.empty()) throw std::invalid_argument("empty group recipe");
  GroupPtr g = build_atom(atoms[0]);
  for (size_t i = 1; i < atoms.size(); ++i) {
    GroupPtr h = build_atom(atoms[i]);
    if ((long long)g->order() * h->order() > 10000)
      throw std::invalid_argument("recipe group exceeds the order cap of 10^4");
    g = product_group(ProductKind::direct, g, h, {}, recipe).group;
  }
  return g;
}

}  // namespace polyrep
