#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unitlab/pgroup.hpp"

namespace unitlab {

// Expression tree over the group constructors:
//   cyclic(p,n)  elem_abelian(p,k)  extraspecial(p, p|p2)  modular(p,n)
//   dihedral(8)  quaternion(8)  direct(a,b)  central(a,b)
// with infix forms  a x b  (direct) and  a Y b  (central), equal precedence,
// left associative. Whitespace is insignificant.
struct GroupSpec {
  enum class Kind { Cyclic, ElemAbelian, Extraspecial, Modular, Dihedral, Quaternion, Direct, Central };

  Kind kind = Kind::Cyclic;
  int p = 0;
  int n = 0;                                        // n, k, or the fixed order 8
  ExtraspecialExp exp_kind = ExtraspecialExp::P;    // extraspecial only
  std::vector<GroupSpec> children;                  // direct/central only

  // Canonical text: compact, no spaces; direct prints infix, central prints
  // the named form, so every tree round-trips through parse_group_spec.
  std::string str() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&);
};

// Throws ParseError (with 1-based line/column) on syntax, unknown
// constructor, or arity errors.
GroupSpec parse_group_spec(std::string_view text);

// Builds the group; construction errors (cap, p = 2 where odd p is required,
// bad central-product parameters) surface as typed exceptions.
PGroup evaluate(const GroupSpec& spec, int cap = kDefaultOrderCap);

}  // namespace unitlab
