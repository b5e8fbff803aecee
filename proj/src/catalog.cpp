#include "unitlab/catalog.hpp"

namespace unitlab {

std::vector<CatalogEntry> builtin_catalog(int p, int cap) {
  std::vector<CatalogEntry> out;
  auto add = [&](const char* text) { out.push_back({text, parse_group_spec(text)}); };
  if (p == 3) {
    add("extraspecial(3,p)");
    add("modular(3,3)");
    add("modular(3,4)");
    add("extraspecial(3,p)xcyclic(3,1)");
    add("central(extraspecial(3,p),cyclic(3,2))");
    add("modular(3,3)xcyclic(3,1)");
    add("cyclic(3,1)xcyclic(3,2)");  // abelian negative control
    add("dihedral(8)");              // p = 2 negative control
  } else if (p == 5) {
    add("extraspecial(5,p)");
    add("modular(5,3)");
    add("cyclic(5,1)xcyclic(5,2)");  // abelian negative control
  } else if (p == 7 && cap > kDefaultOrderCap) {
    add("extraspecial(7,p)");
    add("modular(7,3)");
  }
  return out;
}

}  // namespace unitlab
