#include "unitlab/recognizer.hpp"

#include <algorithm>

namespace unitlab {

namespace {

bool is_p_power(long long n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

int checked_p_power(long long n, int p, const std::string& what) {
  if (!is_p_power(n, p))
    throw PreconditionError("recognizer: " + what + " = " + std::to_string(n) +
                            " is not a p-power; hypotheses violated");
  return static_cast<int>(n);
}

}  // namespace

std::string UnitInvariants::str() const {
  std::string s = "(p=" + std::to_string(p) + ", dim=" + std::to_string(dimension) +
                  ", log|zV|=" + std::to_string(log_center_order) +
                  ", exp zV=" + std::to_string(center_exponent) +
                  ", exp V=" + std::to_string(v_exponent) + ", log|V^p|=";
  s += log_vp_order ? std::to_string(*log_vp_order) : "absent";
  return s + ")";
}

std::string KYLParams::str() const {
  std::string s = "E=" + std::to_string(e_order);
  s += " K=" + std::to_string(k_order);
  s += k_kind == KKind::ExtraspecialExpP ? "(extraspecial exp p)" : "(trivial or C_p)";
  s += " L=" + std::to_string(l_order);
  s += l_kind == LKind::Cyclic ? "(cyclic)" : "(modular)";
  return s;
}

UnitInvariants v_invariants(const PGroup& g) {
  require_derived_order_p(g, "v_invariants");
  if (g.abelian()) throw PreconditionError("v_invariants requires a nonabelian group");

  UnitInvariants ui;
  ui.p = g.p();
  ui.dimension = g.order();
  ui.log_center_order = center_of_v(g).log_order;
  ui.center_exponent = center_of_v_exponent(g);
  ui.v_exponent = predicted_exponent_v(g).exponent;
  if (g.frattini().order() == g.p())
    ui.log_vp_order = vp_decomposition(g, Seed{0x5eed}, 0).predicted_log_order;
  return ui;
}

GroupInvariants recover_group_invariants(const UnitInvariants& ui) {
  int p = ui.p;
  GroupInvariants gi;
  gi.order = checked_p_power(ui.dimension, p, "|G|");

  // Invert |center(V)| = p^{(|G| + (p-1)|center(G)| - p)/p}.
  long long numer = static_cast<long long>(p) * ui.log_center_order - ui.dimension + p;
  if (numer <= 0 || numer % (p - 1) != 0)
    throw PreconditionError("recognizer: center-order formula does not invert to an integer");
  gi.center_order = checked_p_power(numer / (p - 1), p, "|center(G)|");
  gi.center_exponent = checked_p_power(ui.center_exponent, p, "exp center(G)");

  if (ui.v_exponent > p * p) {
    gi.exponent = ui.v_exponent;
  } else if (ui.v_exponent == p * p) {
    // exp G is p or p^2; |Frattini| = p here, so log|V^p| = (|G^p| - 1) + t
    // separates the two: t for |G^p| = 1, t + (p-1) for |G^p| = p.
    if (!ui.log_vp_order)
      throw PreconditionError("recognizer: exp V = p^2 needs log|V^p| to decide exp G");
    int t = (ui.dimension - gi.center_order) / p;
    if ((ui.dimension - gi.center_order) % p != 0)
      throw PreconditionError("recognizer: t is not an integer");
    if (*ui.log_vp_order == t)
      gi.exponent = p;
    else if (*ui.log_vp_order == t + (p - 1))
      gi.exponent = p * p;
    else
      throw PreconditionError("recognizer: log|V^p| outside {t, t+p-1}");
  } else {
    throw PreconditionError("recognizer: exp V < p^2 is impossible for nonabelian G");
  }
  return gi;
}

KYLParams classify_kyl(const GroupInvariants& gi, Prime prime) {
  prime.require_odd("classify_kyl");
  int p = prime.value();
  KYLParams k;
  long long index = gi.order / gi.center_order;
  if (gi.order % gi.center_order != 0)
    throw PreconditionError("classify_kyl: |center| does not divide |G|");

  if (gi.exponent == gi.center_exponent) {
    k.l_kind = LKind::Cyclic;
    k.l_order = checked_p_power(gi.exponent, p, "|L|");
    k.k_order = checked_p_power(p * index, p, "|K|");
  } else {
    k.l_kind = LKind::Modular;
    k.l_order = checked_p_power(static_cast<long long>(p) * gi.exponent, p, "|L|");
    if (index % p != 0) throw PreconditionError("classify_kyl: |G:center| not divisible by p");
    k.k_order = checked_p_power(index / p, p, "|K|");
  }
  k.k_kind = k.k_order > p ? KKind::ExtraspecialExpP : KKind::TrivialOrCp;

  long long e = static_cast<long long>(p) * gi.order / (static_cast<long long>(k.k_order) * k.l_order);
  if (static_cast<long long>(k.k_order) * k.l_order * e != static_cast<long long>(p) * gi.order)
    throw PreconditionError("classify_kyl: |E| |K| |L| / p != |G|");
  k.e_order = checked_p_power(e, p, "|E|");
  return k;
}

PGroup rebuild_from_kyl(const KYLParams& params, Prime prime, int cap) {
  int p = prime.value();
  auto log_p = [&](int v) {
    int k = 0;
    while (v > 1) {
      v /= p;
      ++k;
    }
    return k;
  };

  PGroup l = params.l_kind == LKind::Cyclic
                 ? build_cyclic(prime, log_p(params.l_order), cap)
                 : build_modular_maximal_cyclic(prime, log_p(params.l_order), cap);

  // K Y L; an order-p K merges into L, an order-p cyclic L merges into K.
  PGroup kyl = [&]() -> PGroup {
    if (params.k_order == 1) return l;
    PGroup k = params.k_order == p ? build_cyclic(prime, 1, cap)
                                   : build_extraspecial(prime, ExtraspecialExp::P, cap);
    if (k.order() != params.k_order)
      throw PreconditionError("rebuild_from_kyl: K parameters are inconsistent");
    return central_product(k, l, default_amalgam(l), cap);
  }();

  if (params.e_order == 1) return kyl;
  PGroup e = build_elementary_abelian(prime, log_p(params.e_order), cap);
  return direct_product(e, kyl, cap);
}

KYLReadingReport validate_kyl_reading(const PGroup& g) {
  KYLReadingReport rep;
  GroupInvariants gi = g.invariants();
  int p = g.p();
  if (gi.exponent == gi.center_exponent) {
    rep.corrected_consistent = true;
    rep.literal_consistent = true;
    rep.detail = "cyclic-L case; the disputed clause does not apply";
    return rep;
  }
  // Corrected reading (second clause gives |K|): classify, rebuild, compare.
  try {
    KYLParams params = classify_kyl(gi, g.prime());
    rep.corrected_consistent = rebuild_from_kyl(params, g.prime()).invariants() == gi;
  } catch (const Error&) {
    rep.corrected_consistent = false;
  }
  // Literal reading assigns |L| two values at once: p exp(G) and
  // p^-1 |G:center(G)|; consistent only if they coincide.
  long long index = gi.order / gi.center_order;
  long long l_order = static_cast<long long>(p) * gi.exponent;
  rep.literal_consistent = (l_order == index / p);
  rep.detail = "|L| = " + std::to_string(l_order) + ", p^-1 |G:center| = " +
               std::to_string(index / p) +
               (rep.literal_consistent ? " (literal reading holds)"
                                       : " (literal reading contradicts |L| = p exp G)");
  return rep;
}

bool satisfies_theorem_hypotheses(const PGroup& g, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (g.p() == 2) return fail("p = 2");
  if (g.abelian()) return fail("abelian");
  if (!g.frattini().is_cyclic()) return fail("Frattini subgroup is not cyclic");
  return true;
}

DistinguishResult distinguish(const PGroup& g, const PGroup& h) {
  std::string why;
  if (!satisfies_theorem_hypotheses(g, &why))
    throw PreconditionError("distinguish: " + g.label() + ": " + why);
  if (!satisfies_theorem_hypotheses(h, &why))
    throw PreconditionError("distinguish: " + h.label() + ": " + why);
  if (g.p() != h.p()) throw PreconditionError("distinguish: different primes");

  DistinguishResult res;
  res.left = v_invariants(g);
  res.right = v_invariants(h);
  if (res.left != res.right) {
    res.verdict = Verdict::Distinguished;
    if (res.left.dimension != res.right.dimension)
      res.reason = "dimension " + std::to_string(res.left.dimension) + " vs " +
                   std::to_string(res.right.dimension);
    else if (res.left.log_center_order != res.right.log_center_order)
      res.reason = "log|center(V)| " + std::to_string(res.left.log_center_order) + " vs " +
                   std::to_string(res.right.log_center_order);
    else if (res.left.center_exponent != res.right.center_exponent)
      res.reason = "exp center(V) " + std::to_string(res.left.center_exponent) + " vs " +
                   std::to_string(res.right.center_exponent);
    else if (res.left.v_exponent != res.right.v_exponent)
      res.reason = "exp V " + std::to_string(res.left.v_exponent) + " vs " +
                   std::to_string(res.right.v_exponent);
    else
      res.reason = "log|V^p| " +
                   (res.left.log_vp_order ? std::to_string(*res.left.log_vp_order) : "absent") +
                   " vs " +
                   (res.right.log_vp_order ? std::to_string(*res.right.log_vp_order) : "absent");
    return res;
  }
  res.verdict = Verdict::SameType;
  KYLParams params = classify_kyl(recover_group_invariants(res.left), g.prime());
  res.reason = "identical invariants; " + params.str();
  return res;
}

BermanMatrix berman_matrix(const std::vector<const PGroup*>& catalog) {
  BermanMatrix m;
  int n = static_cast<int>(catalog.size());
  m.labels.reserve(catalog.size());
  for (const PGroup* g : catalog) m.labels.push_back(g->label());
  m.verdicts.assign(n, std::vector<Verdict>(n, Verdict::SameType));

  // Pairs are independent; flatten the upper triangle for the parallel loop.
  // Exceptions may not cross the parallel region, so the first one is parked
  // and rethrown afterwards.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (size_t k = 0; k < pairs.size(); ++k) {
    try {
      auto [i, j] = pairs[k];
      Verdict v = distinguish(*catalog[i], *catalog[j]).verdict;
      m.verdicts[i][j] = v;
      m.verdicts[j][i] = v;
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return m;
}

}  // namespace unitlab
