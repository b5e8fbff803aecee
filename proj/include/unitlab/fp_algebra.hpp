#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unitlab/pgroup.hpp"
#include "unitlab/subspace.hpp"

namespace unitlab {

// An element of the group algebra F_pG: one residue mod p per group element,
// indexed by ElementId. Values are immutable in spirit; all arithmetic is
// exact mod p. Multiplication is the convolution over the group law and costs
// O(|supp(a)| * |G|).
class AlgebraElement {
 public:
  explicit AlgebraElement(const PGroup& g) : group_(&g), c_(g.order(), 0) {}

  static AlgebraElement one(const PGroup& g) { return from_group_element(g, kIdentity); }
  static AlgebraElement from_group_element(const PGroup& g, ElementId e);
  static AlgebraElement scalar(const PGroup& g, int value);

  const PGroup& group() const { return *group_; }
  int p() const { return group_->p(); }
  int size() const { return static_cast<int>(c_.size()); }
  uint8_t coeff(ElementId g) const { return c_[g]; }
  void set_coeff(ElementId g, int value);
  const std::vector<uint8_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  AlgebraElement scaled(int scalar) const;

  // OpenMP gather kernel: out[k] = sum_i a[i] * b[inv(i)k].
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.c_ == b.c_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  std::string str() const;  // e.g. "1 + 2*g5" for diagnostics

 private:
  const PGroup* group_;
  std::vector<uint8_t> c_;
};

// Serial reference for the product kernel: the naive scatter loop
// out[ij] += a[i]*b[j]. Kept for testing the parallel kernel against.
AlgebraElement mul_serial(const AlgebraElement& a, const AlgebraElement& b);

void require_same_group(const AlgebraElement& a, const AlgebraElement& b);

// Sum of coefficients mod p; the kernel of this map is the (nilpotent)
// augmentation ideal.
int augmentation(const AlgebraElement& x);

// Indicator sum over a set of group elements (a conjugacy class, subgroup, ...).
AlgebraElement class_sum(const PGroup& g, const std::vector<ElementId>& members);
AlgebraElement subgroup_sum(const Subgroup& s);

// Exact inverse of a unit: scale to augmentation 1, write x = 1 + n with n in
// the augmentation ideal, and sum the alternating geometric series until the
// running power of n is exactly zero (at most |G| terms).
AlgebraElement invert_normalized(const AlgebraElement& x);

AlgebraElement power(const AlgebraElement& x, long long m);

// Multiplicative order of a unit inside V(F_pG); a p-power.
long long unit_order(const AlgebraElement& x);

// Brauer criterion: x lies in [F_pG, F_pG] iff its coefficient sum over every
// conjugacy class vanishes.
bool commutator_subspace_test(const AlgebraElement& x);

// Explicit span of all gh - hg over basis pairs; the subspace the criterion
// characterizes. Quadratic in |G|, meant for cross-checks on small groups.
Subspace commutator_subspace(const PGroup& g);

// Basis of the center of F_pG as the span of all class sums, cross-checked
// against the nullspace of the commutation-with-generators linear system.
Subspace center_subspace(const PGroup& g);

// A small generating set of G found greedily by index order.
std::vector<ElementId> generating_set(const PGroup& g);

// ---- Seeded sampling -------------------------------------------------------

struct Seed {
  uint64_t value = 0;
};

// Splitting rule for parallel sample runs: sample i uses seed ^ i.
inline Seed sample_seed(Seed base, int index) {
  return Seed{base.value ^ static_cast<uint64_t>(index)};
}

// splitmix64; identical seeds reproduce identical streams on every platform.
class SampleStream {
 public:
  explicit SampleStream(Seed s) : state_(s.value) {}
  uint64_t next();
  int next_mod(int m) { return static_cast<int>(next() % static_cast<uint64_t>(m)); }

 private:
  uint64_t state_;
};

// Uniform coefficients with the identity coefficient adjusted so the
// augmentation is 1. Deterministic given the seed.
AlgebraElement random_normalized_unit(const PGroup& g, Seed seed);
AlgebraElement random_normalized_unit(const PGroup& g, SampleStream& rng);

// Random central element of augmentation 1 (coefficients constant on
// conjugacy classes); every such element is a central unit.
AlgebraElement random_central_unit(const PGroup& g, Seed seed);

// ---- Small exact number theory ----------------------------------------------

// Sum of r-th powers over U(F_p): 0 for 1 <= r <= p-2 and p-1 for r = p-1.
int unit_power_sums(Prime p, int r);

// C(p, r) / p as an exact integer (p divides C(p, r) for 0 < r < p),
// reduced mod p.
int binomial_over_p(int p, int r);

}  // namespace unitlab
