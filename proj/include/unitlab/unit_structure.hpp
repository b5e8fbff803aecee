#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitlab/fp_algebra.hpp"

namespace unitlab {

// ---- Center of V -----------------------------------------------------------

// x = z * prod_i (1 + g_i G'^)^{beta_i} with z supported on the center of G.
// Reconstruction is exact; betas are aligned with the non-central class
// representatives of the conjugacy partition, in representative order.
struct CentralUnitFactorization {
  AlgebraElement z;
  std::vector<uint8_t> betas;
};

CentralUnitFactorization central_unit_factor(const AlgebraElement& x);

// log_p |center(V)| computed two ways and asserted equal, plus the exact
// verification that center(V) = V(F_p center(G)) x N with N elementary
// abelian generated by the 1 + C_i.
struct CenterOfVReport {
  int log_order = 0;
  int rank_route = 0;         // dim center(F_pG) - 1
  int closed_form_route = 0;  // (|G| + (p-1)|center(G)| - p) / p
  int center_algebra_log = 0;  // |center(G)| - 1
  int n_log = 0;               // t
  bool product_verified = false;
};

CenterOfVReport center_of_v(const PGroup& g);

// Exponent of center(V) by the commutative nilpotency-index rule: the order
// of 1 + m is the least p^k with m^{p^k} = 0, evaluated on a basis of the
// augmentation-zero central subspace (p^k-th powers are additive there).
int center_of_v_exponent(const PGroup& g);

// ---- Power identities ------------------------------------------------------

// (a+b)^p = a^p + b^p + sum_r C(p,r)/p a^r b^{p-r} H'^ for H = <a,b> with H'
// central of order exactly p. Returns the right-hand side after asserting it
// equals power(a+b, p).
AlgebraElement frobenius_expansion(const PGroup& g, ElementId a, ElementId b);

struct CentralityWitness {
  bool central = false;
  ElementId first_violator = -1;  // group element g with x^p g != g x^p
};

// Checks that x^p commutes with every group element.
CentralityWitness pth_power_centrality(const AlgebraElement& x);

// x^{p^2} equals the coefficient transport sum alpha_g g^{p^2}.
bool p2_power_identity(const AlgebraElement& x);

// exp V = exp G when exp G > p, else p^2, with a two-sided certificate:
// an explicit unit of that order and the transport-identity upper bound
// p^2 * exp(G^{p^2}).
struct ExponentCertificate {
  int exponent = 0;
  AlgebraElement lower_witness;
  long long witness_order = 0;
  int upper_bound = 0;
  std::string witness_name;
};

ExponentCertificate predicted_exponent_v(const PGroup& g);

// ---- V^p -------------------------------------------------------------------

// The product prod_gamma (u_gamma^p h^-p) with u_gamma = h + gamma(g^-1 h - 1),
// asserted equal to its exact value
//     (1 + g G'^)^-1 (1 + G'^)^-delta,   delta = [(g^-1 h)^p != 1],
// and returned. In exponent-p groups delta is always 0 and the product is
// 1 - g G'^ on the nose; otherwise the central factor (1 + G'^)^-1 appears
// (it lies in V(F_p G^p), so the generators of N are still products of
// p-th powers).
AlgebraElement vp_witness(const PGroup& g, ElementId gg, ElementId h);

// One generator 1 + C_i of N together with units whose p-th powers multiply
// to it exactly (the inverted witness product; all factors are central).
struct NGeneratorExhibit {
  ElementId class_rep = -1;
  ElementId helper = -1;
  AlgebraElement generator;
  std::vector<AlgebraElement> root_factors;  // prod_j root_factors[j]^p == generator
};

// V^p = V(F_p G^p) x N, exhibited constructively:
// every N-generator as a verified product of explicit p-th powers, and every
// basis unit 1 + (z-1)^j of V(F_p G^p) with an explicit p-th root found by
// Frobenius preimage inside a cyclic subalgebra.
struct VpDecomposition {
  int t = 0;
  int predicted_log_order = 0;  // (|G^p| - 1) + t
  std::vector<ElementId> gp_members;
  std::vector<ElementId> class_reps;  // non-central, representative order
  std::vector<NGeneratorExhibit> n_generators;
  std::vector<std::pair<AlgebraElement, AlgebraElement>> torsion_roots;  // (unit, its p-th root)
  int membership_samples_checked = 0;
};

VpDecomposition vp_decomposition(const PGroup& g, Seed seed = Seed{0x5eed}, int samples = 200);

// Does y lie in V(F_p G^p) x N?  y must be central; its projection modulo
// span{C_i} must be supported on G^p with augmentation 1; and the quotient
// must lie in 1 + span{C_i}.
bool vp_membership(const VpDecomposition& d, const PGroup& g, const AlgebraElement& y);

// G intersect V^p, decided per element; asserted equal to G^p.
// Nonabelian groups need |Frattini(G)| = p and p > 2; abelian groups go
// through the commutative Frobenius route directly.
Subgroup intersection_g_vp(const PGroup& g);

// (x^-1 y^-1 x y)^p = 1 for `count` seeded random unit pairs.
bool commutator_exponent_sample(const PGroup& g, Seed seed, int count);

// ---- Shared preconditions ---------------------------------------------------

void require_derived_order_p(const PGroup& g, const std::string& context);
void require_frattini_order_p(const PGroup& g, const std::string& context);

// Central elements have class-constant coefficients; O(|G|) per class.
bool is_central_element(const AlgebraElement& x);

}  // namespace unitlab
