#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "unitlab/prime.hpp"

namespace unitlab {

// Elements of a group are indices into its multiplication table.
// Index 0 is always the identity.
using ElementId = int;
inline constexpr ElementId kIdentity = 0;

// Default cap on the order of constructed groups; overridable per call and,
// in the CLI, via --cap or the UNITLAB_CAP environment variable.
inline constexpr int kDefaultOrderCap = 343;

class PGroup;

// A subgroup given by its sorted member list.
class Subgroup {
 public:
  Subgroup(const PGroup& parent, std::vector<ElementId> members);

  const PGroup& parent() const { return *parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(ElementId g) const;
  bool trivial() const { return members_.size() == 1; }

  int exponent() const;   // max member order (a p-power)
  bool is_cyclic() const;  // some member has order == |subgroup|

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const PGroup* parent_;
  std::vector<ElementId> members_;  // sorted, closed, contains identity
};

struct ConjugacyPartition {
  std::vector<std::vector<ElementId>> classes;  // each sorted; ordered by representative
  std::vector<ElementId> representatives;       // minimal element of each class
  int t = 0;                                    // number of classes of size >= 2
};

struct GroupInvariants {
  int order = 0;
  int exponent = 0;
  int center_order = 0;
  int center_exponent = 0;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

// A finite p-group as a dense multiplication table with eagerly computed
// structural data. Immutable after construction and safe to share across
// threads. Construction validates the table: identity at index 0, two-sided
// inverses, p-power order and element orders, and associativity (exhaustive
// up to order 125, 1e5 seeded random triples above).
class PGroup {
 public:
  PGroup(Prime p, std::vector<uint16_t> table, std::string label);

  // Cached subgroups hold a pointer to their parent, so copies and moves
  // rebind them to the new object.
  PGroup(const PGroup& other);
  PGroup(PGroup&& other);
  PGroup& operator=(const PGroup& other);
  PGroup& operator=(PGroup&& other);

  Prime prime() const { return p_; }
  int p() const { return p_.value(); }
  int order() const { return n_; }
  const std::string& label() const { return label_; }

  ElementId mul(ElementId a, ElementId b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  ElementId conjugate(ElementId g, ElementId h) const {  // h^-1 g h
    return mul(mul(inv(h), g), h);
  }
  ElementId commutator(ElementId g, ElementId h) const {  // (g,h) = g^-1 h^-1 g h
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }
  ElementId pow(ElementId g, long long e) const;

  int element_order(ElementId g) const { return orders_[g]; }
  int exponent() const { return exponent_; }
  bool abelian() const { return abelian_; }
  bool commutes(ElementId g, ElementId h) const { return mul(g, h) == mul(h, g); }

  // Structural subgroups, computed exhaustively at construction.
  const Subgroup& center() const { return *center_; }
  const Subgroup& commutator_subgroup() const { return *derived_; }
  const Subgroup& agemo() const { return *agemo_; }          // G^p = <g^p>
  const Subgroup& frattini() const { return *frattini_; }    // G^p G'
  const ConjugacyPartition& conjugacy_partition() const { return conjugacy_; }

  GroupInvariants invariants() const;

  // Named generators recorded by the builders ("a", "b", "g", ...).
  ElementId generator(const std::string& name) const;
  const std::map<std::string, ElementId>& generators() const { return generators_; }

  // p = 2 entries exist only as negative controls.
  bool negative_control() const { return p_.value() == 2; }

  // Smallest h (by index) with (g, h) != 1; -1 if g is central.
  ElementId first_noncommuting(ElementId g) const;

  Subgroup generated_subgroup(const std::vector<ElementId>& gens) const;
  Subgroup power_subgroup(int k) const;  // <g^{p^k} | g in G>

  void set_generators(std::map<std::string, ElementId> gens) { generators_ = std::move(gens); }

 private:
  void validate_table() const;
  void compute_structure();
  void rebind_subgroups(const PGroup& other);

  Prime p_;
  int n_;
  std::vector<uint16_t> table_;
  std::string label_;
  std::vector<ElementId> inverses_;
  std::vector<int> orders_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::map<std::string, ElementId> generators_;
  ConjugacyPartition conjugacy_;
  // Shared so PGroup stays copyable while Subgroup keeps a stable parent link.
  std::shared_ptr<const Subgroup> center_, derived_, agemo_, frattini_;
};

// ---- Constructions -------------------------------------------------------

PGroup build_cyclic(Prime p, int n, int cap = kDefaultOrderCap);

enum class ExtraspecialExp { P, P2 };
PGroup build_extraspecial(Prime p, ExtraspecialExp kind, int cap = kDefaultOrderCap);

// M_{p^n} = <a, b | a^{p^{n-1}} = b^p = 1, (a,b) = a^{p^{n-2}}>, n >= 3.
PGroup build_modular_maximal_cyclic(Prime p, int n, int cap = kDefaultOrderCap);

PGroup build_elementary_abelian(Prime p, int k, int cap = kDefaultOrderCap);

PGroup direct_product(const PGroup& g, const PGroup& h, int cap = kDefaultOrderCap);

// (K x L) / D with D the anti-diagonal identification of the order-p center
// of K with the given central order-p subgroup of L.
PGroup central_product(const PGroup& k, const PGroup& l, const Subgroup& amalgam,
                       int cap = kDefaultOrderCap);

// Canonical amalgam choice: the order-p subgroup generated by the minimal-index
// central element of order p.
Subgroup default_amalgam(const PGroup& l);

// p = 2 negative controls; constructible, but flagged, and rejected by every
// operation whose theory needs p > 2.
PGroup build_dihedral8();
PGroup build_quaternion8();

// Table relabeled by a permutation fixing the identity; pi must be such a
// permutation. Used by the isomorphism-invariance tests.
PGroup relabel(const PGroup& g, const std::vector<ElementId>& pi);

}  // namespace unitlab
