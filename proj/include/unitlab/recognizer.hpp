#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitlab/unit_structure.hpp"

namespace unitlab {

// Invariants of the unit group V(F_pG). Each field is defined purely by the
// group structure of V (orders, exponents, |center(V)|, |V^p|), so the tuple
// is invariant under isomorphism of V; it is computed here on the group basis
// for efficiency.
struct UnitInvariants {
  int p = 0;
  int dimension = 0;         // |G|, from |V| = p^{|G|-1}
  int log_center_order = 0;  // log_p |center(V)|
  int center_exponent = 0;   // exp center(V)
  int v_exponent = 0;        // exp V
  std::optional<int> log_vp_order;  // log_p |V^p|, present when |Frattini(G)| = p

  friend bool operator==(const UnitInvariants&, const UnitInvariants&) = default;
  std::string str() const;
};

UnitInvariants v_invariants(const PGroup& g);

// Inverts the center-order formula and the exponent case split to recover
// (|G|, exp G, |center(G)|, exp center(G)) from the unit-side tuple.
GroupInvariants recover_group_invariants(const UnitInvariants& ui);

// ---- Kovacs decomposition G = E x (K Y L) -----------------------------------

enum class KKind { TrivialOrCp, ExtraspecialExpP };
enum class LKind { Cyclic, Modular };

struct KYLParams {
  int e_order = 1;
  int k_order = 1;
  KKind k_kind = KKind::TrivialOrCp;
  int l_order = 1;
  LKind l_kind = LKind::Cyclic;

  friend bool operator==(const KYLParams&, const KYLParams&) = default;
  std::string str() const;
};

// L is cyclic iff exp G = exp center(G); then |L| = exp G and
// |K| = p |G : center(G)|; otherwise L is modular, |L| = p exp G and
// |K| = p^-1 |G : center(G)| (the corrected reading, see validate_kyl_reading).
KYLParams classify_kyl(const GroupInvariants& gi, Prime p);

// Rebuilds E x (K Y L) from the parameters; degenerate order-p factors
// collapse through the central product as expected.
PGroup rebuild_from_kyl(const KYLParams& params, Prime p, int cap = kDefaultOrderCap);

// The statement pairing |L| = p exp(G) with a second clause "|L| = p^-1
// |G:center(G)|" can only be about |K| (else it assigns |L| two different
// values). This check evaluates both readings against a built group and
// reports which one is consistent.
struct KYLReadingReport {
  bool corrected_consistent = false;  // second clause read as |K|
  bool literal_consistent = false;    // second clause read as |L| verbatim
  std::string detail;
};

KYLReadingReport validate_kyl_reading(const PGroup& g);

// ---- Pairwise recognition -----------------------------------------------------

bool satisfies_theorem_hypotheses(const PGroup& g, std::string* why = nullptr);

enum class Verdict { Distinguished, SameType };

struct DistinguishResult {
  Verdict verdict = Verdict::SameType;
  std::string reason;  // the separating invariant, or the shared parameters
  UnitInvariants left, right;
};

DistinguishResult distinguish(const PGroup& g, const PGroup& h);

struct BermanMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Verdict>> verdicts;  // symmetric, SameType diagonal
};

// Pairwise verdicts over a catalog; pairs are evaluated in parallel.
BermanMatrix berman_matrix(const std::vector<const PGroup*>& catalog);

}  // namespace unitlab
