#include "unitlab/unit_structure.hpp"

#include <algorithm>

namespace unitlab {

void require_derived_order_p(const PGroup& g, const std::string& context) {
  g.prime().require_odd(context);
  if (g.commutator_subgroup().order() != g.p())
    throw PreconditionError(context + " requires |G'| = p (got " +
                            std::to_string(g.commutator_subgroup().order()) + ")");
}

void require_frattini_order_p(const PGroup& g, const std::string& context) {
  g.prime().require_odd(context);
  if (g.frattini().order() != g.p())
    throw PreconditionError(context + " requires |Frattini(G)| = p (got " +
                            std::to_string(g.frattini().order()) + ")");
}

bool is_central_element(const AlgebraElement& x) {
  for (const auto& cls : x.group().conjugacy_partition().classes) {
    uint8_t c0 = x.coeff(cls.front());
    for (ElementId e : cls)
      if (x.coeff(e) != c0) return false;
  }
  return true;
}

namespace {

// Restriction of x to coefficients supported on the given sorted member list.
AlgebraElement restrict_to(const AlgebraElement& x, const std::vector<ElementId>& members) {
  AlgebraElement out(x.group());
  for (ElementId e : members) out.set_coeff(e, x.coeff(e));
  return out;
}

bool supported_on(const AlgebraElement& x, const std::vector<ElementId>& members) {
  for (ElementId e = 0; e < x.size(); ++e)
    if (x.coeff(e) != 0 && !std::binary_search(members.begin(), members.end(), e)) return false;
  return true;
}

std::vector<ElementId> noncentral_class_reps(const PGroup& g) {
  std::vector<ElementId> reps;
  const auto& part = g.conjugacy_partition();
  for (size_t i = 0; i < part.classes.size(); ++i)
    if (part.classes[i].size() >= 2) reps.push_back(part.representatives[i]);
  return reps;
}

// 1 + g G'^ for the class of the given representative; with |G'| = p this is
// 1 + C_g.
AlgebraElement one_plus_class_sum(const PGroup& g, const std::vector<ElementId>& cls) {
  AlgebraElement out = AlgebraElement::one(g);
  for (ElementId e : cls) out.set_coeff(e, (out.coeff(e) + 1) % g.p());
  return out;
}

// Coefficient transport x = sum a_g g  ->  sum a_g g^e.
AlgebraElement transport_power(const AlgebraElement& x, long long e) {
  const PGroup& g = x.group();
  AlgebraElement out(g);
  for (ElementId i = 0; i < g.order(); ++i) {
    if (x.coeff(i) == 0) continue;
    ElementId target = g.pow(i, e);
    out.set_coeff(target, (out.coeff(target) + x.coeff(i)) % g.p());
  }
  return out;
}

}  // namespace

// ---- central_unit_factor ----------------------------------------------------

CentralUnitFactorization central_unit_factor(const AlgebraElement& x) {
  const PGroup& g = x.group();
  require_derived_order_p(g, "central_unit_factor");
  if (!is_central_element(x)) throw PreconditionError("central_unit_factor: element is not central");
  if (augmentation(x) != 1)
    throw PreconditionError("central_unit_factor: element is not normalized");

  const auto& part = g.conjugacy_partition();
  AlgebraElement z = restrict_to(x, g.center().members());

  // beta_i read off from z^-1 (x - z), which lies in span{C_i}.
  AlgebraElement w = invert_normalized(z) * (x - z);
  std::vector<ElementId> reps = noncentral_class_reps(g);
  std::vector<uint8_t> betas;
  betas.reserve(reps.size());
  for (ElementId r : reps) betas.push_back(w.coeff(r));

  // Exact reconstruction: z * prod (1 + g_i G'^)^{beta_i}.
  AlgebraElement acc = z;
  size_t idx = 0;
  for (size_t i = 0; i < part.classes.size(); ++i) {
    if (part.classes[i].size() < 2) continue;
    uint8_t beta = betas[idx++];
    if (beta != 0) acc = acc * power(one_plus_class_sum(g, part.classes[i]), beta);
  }
  if (acc != x) throw Error("central_unit_factor: reconstruction failed");
  return CentralUnitFactorization{std::move(z), std::move(betas)};
}

// ---- center_of_v -------------------------------------------------------------

CenterOfVReport center_of_v(const PGroup& g) {
  require_derived_order_p(g, "center_of_v");
  CenterOfVReport rep;
  rep.rank_route = center_subspace(g).dim() - 1;

  int p = g.p();
  int numer = g.order() + (p - 1) * g.center().order() - p;
  if (numer % p != 0) throw Error("center_of_v: closed form is not an integer");
  rep.closed_form_route = numer / p;
  if (rep.rank_route != rep.closed_form_route)
    throw Error("center_of_v: rank route and closed form disagree");
  rep.log_order = rep.rank_route;

  rep.center_algebra_log = g.center().order() - 1;
  rep.n_log = g.conjugacy_partition().t;

  // N is elementary abelian and meets V(F_p center(G)) trivially.
  const auto& part = g.conjugacy_partition();
  Subspace combined(p, g.order());
  for (ElementId z : g.center().members()) {
    if (z == kIdentity) continue;
    AlgebraElement m = AlgebraElement::from_group_element(g, z) - AlgebraElement::one(g);
    combined.insert(m.coeffs());
  }
  bool ok = true;
  std::vector<AlgebraElement> gens;
  for (size_t i = 0; i < part.classes.size(); ++i) {
    if (part.classes[i].size() < 2) continue;
    AlgebraElement n_i = one_plus_class_sum(g, part.classes[i]);
    ok = ok && is_central_element(n_i) && !n_i.is_one() && power(n_i, p).is_one();
    combined.insert((n_i - AlgebraElement::one(g)).coeffs());
    for (const auto& prev : gens) {
      // commuting generators with vanishing pairwise products
      AlgebraElement prod = (prev - AlgebraElement::one(g)) * (n_i - AlgebraElement::one(g));
      ok = ok && prod.is_zero() && (prev * n_i == n_i * prev);
    }
    gens.push_back(std::move(n_i));
  }
  ok = ok && combined.dim() == rep.center_algebra_log + rep.n_log;
  ok = ok && rep.center_algebra_log + rep.n_log == rep.log_order;
  rep.product_verified = ok;
  if (!ok) throw Error("center_of_v: product decomposition failed to verify");
  return rep;
}

int center_of_v_exponent(const PGroup& g) {
  int p = g.p();
  int exp = 1;
  auto nil_order = [&](AlgebraElement m) {
    int ord = 1;
    while (!m.is_zero()) {
      m = power(m, p);
      ord *= p;
    }
    return ord;
  };
  // Basis of the augmentation-zero central subspace: z - 1 over nontrivial
  // central z, plus the non-singleton class sums.
  for (ElementId z : g.center().members()) {
    if (z == kIdentity) continue;
    exp = std::max(exp,
                   nil_order(AlgebraElement::from_group_element(g, z) - AlgebraElement::one(g)));
  }
  for (const auto& cls : g.conjugacy_partition().classes)
    if (cls.size() >= 2) exp = std::max(exp, nil_order(class_sum(g, cls)));
  return exp;
}

// ---- frobenius_expansion ------------------------------------------------------

AlgebraElement frobenius_expansion(const PGroup& g, ElementId a, ElementId b) {
  int p = g.p();
  Subgroup h = g.generated_subgroup({a, b});
  std::vector<ElementId> comm_gens;
  for (ElementId x : h.members())
    for (ElementId y : h.members()) comm_gens.push_back(g.commutator(x, y));
  Subgroup h_derived = g.generated_subgroup(comm_gens);
  if (h_derived.trivial())
    throw PreconditionError("frobenius_expansion: <a,b> is abelian");
  if (h_derived.order() != p)
    throw PreconditionError("frobenius_expansion: |<a,b>'| != p");
  for (ElementId d : h_derived.members())
    for (ElementId x : h.members())
      if (!g.commutes(d, x))
        throw PreconditionError("frobenius_expansion: <a,b>' is not central in <a,b>");

  AlgebraElement rhs = AlgebraElement::from_group_element(g, g.pow(a, p)) +
                       AlgebraElement::from_group_element(g, g.pow(b, p));
  AlgebraElement hprime_sum = subgroup_sum(h_derived);
  for (int r = 1; r <= p - 1; ++r) {
    int coef = binomial_over_p(p, r);
    if (coef == 0) continue;
    ElementId word = g.mul(g.pow(a, r), g.pow(b, p - r));
    rhs += (AlgebraElement::from_group_element(g, word) * hprime_sum).scaled(coef);
  }

  AlgebraElement lhs = power(AlgebraElement::from_group_element(g, a) +
                                 AlgebraElement::from_group_element(g, b),
                             p);
  if (lhs != rhs) throw Error("frobenius_expansion: expansion disagrees with (a+b)^p");
  return rhs;
}

// ---- p-th and p^2-th powers ---------------------------------------------------

CentralityWitness pth_power_centrality(const AlgebraElement& x) {
  const PGroup& g = x.group();
  require_derived_order_p(g, "pth_power_centrality");
  AlgebraElement y = power(x, g.p());
  // (yg)[k] = y[k g^-1], (gy)[k] = y[g^-1 k]; compare without full products.
  for (ElementId e = 0; e < g.order(); ++e) {
    ElementId ei = g.inv(e);
    for (ElementId k = 0; k < g.order(); ++k)
      if (y.coeff(g.mul(k, ei)) != y.coeff(g.mul(ei, k))) return CentralityWitness{false, e};
  }
  return CentralityWitness{true, -1};
}

bool p2_power_identity(const AlgebraElement& x) {
  const PGroup& g = x.group();
  require_derived_order_p(g, "p2_power_identity");
  long long p2 = static_cast<long long>(g.p()) * g.p();
  return power(x, p2) == transport_power(x, p2);
}

ExponentCertificate predicted_exponent_v(const PGroup& g) {
  require_derived_order_p(g, "predicted_exponent_v");
  if (g.abelian()) throw PreconditionError("predicted_exponent_v requires a nonabelian group");
  int p = g.p();
  int exp_g = g.exponent();
  ExponentCertificate cert{0, AlgebraElement(g), 0, 0, ""};
  cert.exponent = exp_g > p ? exp_g : p * p;

  // Upper bound from x^{p^2} = sum a_g g^{p^2}: orders divide p^2 exp(G^{p^2}).
  cert.upper_bound = p * p * g.power_subgroup(2).exponent();
  if (cert.upper_bound != cert.exponent)
    throw Error("predicted_exponent_v: upper bound disagrees with prediction");

  if (exp_g > p) {
    ElementId witness = 0;
    for (ElementId e = 0; e < g.order(); ++e)
      if (g.element_order(e) == exp_g) {
        witness = e;
        break;
      }
    cert.lower_witness = AlgebraElement::from_group_element(g, witness);
    cert.witness_name = "group element g" + std::to_string(witness) + " of maximal order";
  } else {
    // exp(G) = p: a + b - 1 with (a,b) != 1 has order exactly p^2.
    ElementId a = -1, b = -1;
    for (ElementId e = 0; e < g.order() && a < 0; ++e) {
      ElementId nc = g.first_noncommuting(e);
      if (nc >= 0) {
        a = e;
        b = nc;
      }
    }
    cert.lower_witness = AlgebraElement::from_group_element(g, a) +
                         AlgebraElement::from_group_element(g, b) -
                         AlgebraElement::one(g);
    cert.witness_name =
        "a + b - 1 with a = g" + std::to_string(a) + ", b = g" + std::to_string(b);
  }
  cert.witness_order = unit_order(cert.lower_witness);
  if (cert.witness_order != cert.exponent)
    throw Error("predicted_exponent_v: witness order " + std::to_string(cert.witness_order) +
                " != predicted " + std::to_string(cert.exponent));
  return cert;
}

// ---- V^p ----------------------------------------------------------------------

AlgebraElement vp_witness(const PGroup& g, ElementId gg, ElementId h) {
  require_frattini_order_p(g, "vp_witness");
  if (g.center().contains(gg)) throw PreconditionError("vp_witness: g must be non-central");
  if (g.commutes(gg, h)) throw PreconditionError("vp_witness: (g,h) = 1");
  int p = g.p();

  ElementId ginv_h = g.mul(g.inv(gg), h);
  AlgebraElement prod = AlgebraElement::one(g);
  AlgebraElement h_to_minus_p = AlgebraElement::from_group_element(g, g.inv(g.pow(h, p)));
  for (int gamma = 1; gamma <= p - 1; ++gamma) {
    AlgebraElement u = AlgebraElement::from_group_element(g, h) +
                       (AlgebraElement::from_group_element(g, ginv_h) - AlgebraElement::one(g))
                           .scaled(gamma);
    prod = prod * power(u, p) * h_to_minus_p;
  }

  // Exact value: expanding prod_gamma (1 + gamma A + B_gamma) with
  // A = ((g^-1 h)^p - 1) h^-p leaves 1 - A^{p-1} from the A-part, and
  // A^{p-1} = G'^ whenever (g^-1 h)^p != 1. So the product is
  // (1 + g G'^)^-1 (1 + G'^)^-delta; exponent-p groups always have delta = 0.
  AlgebraElement gsum = subgroup_sum(g.commutator_subgroup());
  AlgebraElement expected =
      AlgebraElement::one(g) - AlgebraElement::from_group_element(g, gg) * gsum;
  if (g.pow(ginv_h, p) != kIdentity) expected -= gsum;
  if (prod != expected) throw Error("vp_witness: product identity failed");
  return prod;
}

VpDecomposition vp_decomposition(const PGroup& g, Seed seed, int samples) {
  require_frattini_order_p(g, "vp_decomposition");
  if (g.abelian()) throw PreconditionError("vp_decomposition requires a nonabelian group");
  int p = g.p();
  const auto& part = g.conjugacy_partition();

  VpDecomposition d;
  d.t = part.t;
  d.gp_members = g.agemo().members();
  d.predicted_log_order = (g.agemo().order() - 1) + d.t;
  d.class_reps = noncentral_class_reps(g);

  // (i) every N-generator as a verified product of explicit p-th powers:
  // 1 + C_i = (prod_gamma u_gamma^p h^-p)^-1 (1 + G'^)^-delta
  //         = (h^{p-1})^p prod_gamma (u_gamma^-1)^p (r^p)^delta,
  // where r is the Frobenius-preimage root of (1 + G'^)^-1 = 1 - G'^ inside
  // F_p<g0> (delta = 1 forces G^p = G', so such a g0 exists).
  for (size_t i = 0; i < part.classes.size(); ++i) {
    if (part.classes[i].size() < 2) continue;
    ElementId rep = part.representatives[i];
    ElementId h = g.first_noncommuting(rep);
    vp_witness(g, rep, h);  // asserts the exact product identity

    NGeneratorExhibit ex{rep, h, one_plus_class_sum(g, part.classes[i]), {}};
    ex.root_factors.push_back(AlgebraElement::from_group_element(g, g.pow(h, p - 1)));
    ElementId ginv_h = g.mul(g.inv(rep), h);
    for (int gamma = 1; gamma <= p - 1; ++gamma) {
      AlgebraElement u = AlgebraElement::from_group_element(g, h) +
                         (AlgebraElement::from_group_element(g, ginv_h) - AlgebraElement::one(g))
                             .scaled(gamma);
      ex.root_factors.push_back(invert_normalized(u));
    }
    if (g.pow(ginv_h, p) != kIdentity) {
      // (g^-1 h)^p generates G^p = G'; its p-th root g^-1 h transports
      // 1 - G'^ back to an explicit unit with p-th power 1 - G'^.
      AlgebraElement root(g);
      for (int k = 1; k <= p - 1; ++k) root.set_coeff(g.pow(ginv_h, k), p - 1);
      if (power(root, p) !=
          AlgebraElement::one(g) - subgroup_sum(g.commutator_subgroup()))
        throw Error("vp_decomposition: central correction root failed");
      ex.root_factors.push_back(std::move(root));
    }
    AlgebraElement check = AlgebraElement::one(g);
    for (const auto& f : ex.root_factors) check = check * power(f, p);
    if (check != ex.generator)
      throw Error("vp_decomposition: N-generator is not the product of the exhibited p-th powers");
    d.n_generators.push_back(std::move(ex));
  }

  // (ii) V(F_p G^p) inside V^p: explicit p-th roots for the basis units
  // 1 + (z-1)^j via coefficient transport along the p-th-power bijection of a
  // cyclic subgroup <g0> with g0^p generating G^p.
  if (g.agemo().order() > 1) {
    ElementId z = d.gp_members[1];
    ElementId g0 = -1;
    for (ElementId e = 0; e < g.order(); ++e)
      if (g.pow(e, p) == z) {
        g0 = e;
        break;
      }
    if (g0 < 0) throw Error("vp_decomposition: G^p generator has no p-th root in G");
    AlgebraElement zm1 = AlgebraElement::from_group_element(g, z) - AlgebraElement::one(g);
    AlgebraElement basis_unit = AlgebraElement::one(g);
    for (int j = 1; j <= p - 1; ++j) {
      basis_unit = AlgebraElement::one(g) + power(zm1, j);
      AlgebraElement root(g);
      for (int k = 0; k < p; ++k) {
        int c = basis_unit.coeff(g.pow(z, k));
        if (c != 0) {
          ElementId pre = g.pow(g0, k);
          root.set_coeff(pre, (root.coeff(pre) + c) % p);
        }
      }
      if (power(root, p) != basis_unit)
        throw Error("vp_decomposition: Frobenius preimage is not a p-th root");
      d.torsion_roots.emplace_back(basis_unit, std::move(root));
    }
  }

  // (iii) sampled x: x^p must pass the membership test.
  for (int i = 0; i < samples; ++i) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(seed, i));
    if (!vp_membership(d, g, power(x, p)))
      throw Error("vp_decomposition: sampled p-th power failed the membership test");
  }
  d.membership_samples_checked = samples;
  return d;
}

bool vp_membership(const VpDecomposition& d, const PGroup& g, const AlgebraElement& y) {
  if (&y.group() != &g) throw PreconditionError("vp_membership: group mismatch");
  if (!is_central_element(y)) return false;

  // Projection modulo span{C_i}: for a central element this is exactly the
  // restriction to the central support.
  AlgebraElement y0 = restrict_to(y, g.center().members());
  if (!supported_on(y0, d.gp_members)) return false;
  if (augmentation(y0) != 1) return false;

  // Quotient must lie in 1 + span{C_i}.
  AlgebraElement n = invert_normalized(y0) * y;
  AlgebraElement rem = n - AlgebraElement::one(g);
  if (!is_central_element(rem)) return false;
  for (ElementId z : g.center().members())
    if (rem.coeff(z) != 0) return false;
  return true;
}

Subgroup intersection_g_vp(const PGroup& g) {
  int p = g.p();
  std::vector<ElementId> members;
  if (g.abelian()) {
    // Frobenius route: x^p = sum a_g g^p, so the p-th power set is all of V^p
    // meets G in exactly the set of p-th powers.
    std::vector<char> is_pth(g.order(), 0);
    for (ElementId e = 0; e < g.order(); ++e) is_pth[g.pow(e, p)] = 1;
    for (ElementId e = 0; e < g.order(); ++e)
      if (is_pth[e]) members.push_back(e);
  } else {
    require_frattini_order_p(g, "intersection_g_vp");
    VpDecomposition d = vp_decomposition(g, Seed{0x5eed}, 0);
    for (ElementId e = 0; e < g.order(); ++e)
      if (vp_membership(d, g, AlgebraElement::from_group_element(g, e))) members.push_back(e);
  }
  if (members != g.agemo().members())
    throw Error("intersection_g_vp: G intersect V^p != G^p");
  return Subgroup(g, members);
}

bool commutator_exponent_sample(const PGroup& g, Seed seed, int count) {
  if (g.commutator_subgroup().order() > g.p())
    throw PreconditionError("commutator_exponent_sample requires |G'| <= p");
  bool all_ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : all_ok)
  for (int i = 0; i < count; ++i) {
    SampleStream rng(sample_seed(seed, i));
    AlgebraElement x = random_normalized_unit(g, rng);
    AlgebraElement y = random_normalized_unit(g, rng);
    AlgebraElement c = invert_normalized(x) * invert_normalized(y) * x * y;
    all_ok = all_ok && power(c, g.p()).is_one();
  }
  return all_ok;
}

}  // namespace unitlab
