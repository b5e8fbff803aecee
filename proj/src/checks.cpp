#include "unitlab/checks.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace unitlab {

namespace {

struct GroupEntry {
  int catalog_p;
  std::string label;
  std::shared_ptr<const PGroup> group;
};

std::vector<GroupEntry> build_groups(const CheckConfig& cfg) {
  std::vector<GroupEntry> out;
  for (int p : {3, 5, 7}) {
    if (cfg.p_filter && *cfg.p_filter != p) continue;
    for (const CatalogEntry& entry : builtin_catalog(p, cfg.cap))
      out.push_back({p, entry.label, std::make_shared<const PGroup>(evaluate(entry.spec, cfg.cap))});
  }
  return out;
}

std::string skip_odd_derived(const PGroup& g) {
  if (g.p() == 2) return "p = 2";
  if (g.commutator_subgroup().order() != g.p()) return "|G'| != p";
  return "";
}

std::string skip_odd_frattini(const PGroup& g) {
  if (g.p() == 2) return "p = 2";
  if (g.abelian()) return "abelian";
  if (g.frattini().order() != g.p()) return "|Frattini(G)| != p";
  return "";
}

// ---- per-group check bodies (throw unitlab::Error on any violation) --------

std::string run_brauer(const PGroup& g, const CheckConfig& cfg) {
  int p = g.p();
  int bad = -1;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.samples; ++i) {
    SampleStream rng(sample_seed(Seed{cfg.seed}, i));
    AlgebraElement x = random_normalized_unit(g, rng);
    AlgebraElement y = random_normalized_unit(g, rng);
    bool ok = commutator_subspace_test(x * y - y * x) &&
              commutator_subspace_test(power(x + y, p) - power(x, p) - power(y, p));
    if (!ok) {
#pragma omp critical
      bad = bad < 0 ? i : std::min(bad, i);
    }
  }
  if (bad >= 0) throw Error("class-coefficient criterion violated at sample " + std::to_string(bad));

  std::string detail = "pairs=" + std::to_string(cfg.samples) + " frobenius-congruence ok";
  if (g.order() <= 81) {
    Subspace span = commutator_subspace(g);
    int classes = static_cast<int>(g.conjugacy_partition().classes.size());
    if (span.dim() != g.order() - classes)
      throw Error("span{xy-yx} dimension " + std::to_string(span.dim()) + " != |G| - classes");
    for (const auto& row : span.basis()) {
      AlgebraElement v(g);
      for (ElementId e = 0; e < g.order(); ++e) v.set_coeff(e, row[e]);
      if (!commutator_subspace_test(v)) throw Error("span basis vector fails the criterion");
    }
    if (commutator_subspace_test(AlgebraElement::one(g)) ||
        span.contains(AlgebraElement::one(g).coeffs()))
      throw Error("identity element reported inside the commutator subspace");
    detail += "; span dim " + std::to_string(span.dim()) + " agrees with criterion";
  }
  return detail;
}

std::string run_center_eq2(const PGroup& g, const CheckConfig&) {
  CenterOfVReport rep = center_of_v(g);
  return "log|zV|=" + std::to_string(rep.log_order) + " (rank " + std::to_string(rep.rank_route) +
         ", closed form " + std::to_string(rep.closed_form_route) + ")";
}

std::string run_center_eq3(const PGroup& g, const CheckConfig& cfg) {
  CenterOfVReport rep = center_of_v(g);
  if (!rep.product_verified) throw Error("product decomposition unverified");
  for (int i = 0; i < cfg.samples; ++i)
    central_unit_factor(random_central_unit(g, sample_seed(Seed{cfg.seed}, i)));
  return "zV = V(F_p zG) x N verified, dims " + std::to_string(rep.center_algebra_log) + "+" +
         std::to_string(rep.n_log) + "; factorizations=" + std::to_string(cfg.samples);
}

std::string run_lemma_abp(const PGroup& g, const CheckConfig& cfg) {
  SampleStream rng(Seed{cfg.seed});
  int pairs = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    ElementId a, b;
    int guard = 0;
    do {
      a = rng.next_mod(g.order());
      b = rng.next_mod(g.order());
      if (++guard > 100000) throw Error("could not sample a non-commuting pair");
    } while (g.commutes(a, b));
    frobenius_expansion(g, a, b);
    ++pairs;
  }
  return "pairs=" + std::to_string(pairs) + " expansion == (a+b)^p";
}

std::string run_lemma_center(const PGroup& g, const CheckConfig& cfg) {
  for (ElementId e = 0; e < g.order(); ++e)
    if (!g.center().contains(g.pow(e, g.p())))
      throw Error("g^p not central for g" + std::to_string(e));
  int bad = -1;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.samples; ++i) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(Seed{cfg.seed}, i));
    if (!pth_power_centrality(x).central) {
#pragma omp critical
      bad = bad < 0 ? i : std::min(bad, i);
    }
  }
  if (bad >= 0) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(Seed{cfg.seed}, bad));
    throw Error("x^p not central at sample " + std::to_string(bad) + ", violator g" +
                std::to_string(pth_power_centrality(x).first_violator));
  }
  return "units=" + std::to_string(cfg.samples) + " and all group elements have central p-th powers";
}

std::string run_eq_p2(const PGroup& g, const CheckConfig& cfg) {
  bool exp_at_most_p2 = g.exponent() <= g.p() * g.p();
  int bad = -1;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.samples; ++i) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(Seed{cfg.seed}, i));
    bool ok = p2_power_identity(x);
    if (ok && exp_at_most_p2) ok = power(x, g.p() * g.p()).is_one();
    if (!ok) {
#pragma omp critical
      bad = bad < 0 ? i : std::min(bad, i);
    }
  }
  if (bad >= 0) throw Error("x^{p^2} transport identity violated at sample " + std::to_string(bad));
  std::string detail = "units=" + std::to_string(cfg.samples) + " transport identity holds";
  if (exp_at_most_p2) detail += "; x^{p^2} = 1 throughout";
  return detail;
}

std::string run_exp_v(const PGroup& g, const CheckConfig& cfg) {
  ExponentCertificate cert = predicted_exponent_v(g);
  for (int i = 0; i < cfg.samples; ++i) {
    long long ord = unit_order(random_normalized_unit(g, sample_seed(Seed{cfg.seed}, i)));
    if (cert.exponent % ord != 0)
      throw Error("sampled unit order " + std::to_string(ord) + " exceeds exp V");
  }
  return "exp V = " + std::to_string(cert.exponent) + ", witness: " + cert.witness_name +
         ", upper bound " + std::to_string(cert.upper_bound) + "; " +
         std::to_string(cfg.samples) + " sampled orders divide it";
}

std::string run_vp_witness(const PGroup& g, const CheckConfig&) {
  int count = 0, corrected = 0;
  for (ElementId e = 0; e < g.order(); ++e) {
    if (g.center().contains(e)) continue;
    ElementId h = g.first_noncommuting(e);
    vp_witness(g, e, h);
    if (g.pow(g.mul(g.inv(e), h), g.p()) != kIdentity) ++corrected;
    ++count;
  }
  std::string detail = "witness identity exact for all " + std::to_string(count) + " non-central g";
  if (corrected > 0)
    detail += "; central factor (1+G'^)^-1 present for " + std::to_string(corrected);
  return detail;
}

std::string run_vp_decomp(const PGroup& g, const CheckConfig& cfg) {
  VpDecomposition d = vp_decomposition(g, Seed{cfg.seed}, cfg.samples);
  return "log|V^p| = " + std::to_string(d.predicted_log_order) + " = (" +
         std::to_string(static_cast<int>(d.gp_members.size())) + "-1)+" + std::to_string(d.t) +
         "; N-generators=" + std::to_string(d.n_generators.size()) +
         " torsion-roots=" + std::to_string(d.torsion_roots.size()) +
         " membership-samples=" + std::to_string(d.membership_samples_checked);
}

std::string run_johnson(const PGroup& g, const CheckConfig&) {
  Subgroup inter = intersection_g_vp(g);
  return "G intersect V^p has order " + std::to_string(inter.order()) + " == |G^p| = " +
         std::to_string(g.agemo().order());
}

std::string run_comm_exp(const PGroup& g, const CheckConfig& cfg) {
  if (!commutator_exponent_sample(g, Seed{cfg.seed}, cfg.samples))
    throw Error("a commutator p-th power is nontrivial");
  return "pairs=" + std::to_string(cfg.samples) + " (x,y)-commutators have p-th power 1";
}

std::string run_recognizer(const PGroup& g, const CheckConfig&) {
  UnitInvariants ui = v_invariants(g);
  GroupInvariants recovered = recover_group_invariants(ui);
  GroupInvariants brute = g.invariants();
  if (!(recovered == brute)) throw Error("recovered invariants disagree with brute force");
  KYLParams params = classify_kyl(recovered, g.prime());
  if (!(rebuild_from_kyl(params, g.prime()).invariants() == brute))
    throw Error("rebuilt group has different invariants");
  KYLReadingReport reading = validate_kyl_reading(g);
  if (!reading.corrected_consistent) throw Error("corrected |K| reading inconsistent: " + reading.detail);
  return ui.str() + " -> " + params.str() +
         (reading.literal_consistent ? "" : "; literal |L| reading rejected");
}

// ---- aggregate checks --------------------------------------------------------

std::string run_huppert(int p) {
  Prime prime(p);
  for (int r = 1; r <= p - 1; ++r) {
    int expected = r == p - 1 ? p - 1 : 0;
    int got = unit_power_sums(prime, r);
    if (got != expected)
      throw Error("sum gamma^" + std::to_string(r) + " = " + std::to_string(got) + " != " +
                  std::to_string(expected));
  }
  return "sum gamma^r over U(F_p): 0 for r < p-1 and p-1 for r = p-1";
}

std::string run_berman(const std::vector<const PGroup*>& eligible) {
  if (eligible.size() < 2) throw Error("fewer than two eligible groups");
  BermanMatrix m = berman_matrix(eligible);
  int distinguished = 0;
  for (size_t i = 0; i < eligible.size(); ++i) {
    for (size_t j = i + 1; j < eligible.size(); ++j) {
      // Parameter-level oracle: catalog entries are the same isomorphism type
      // exactly when their brute-force invariant tuples agree.
      bool same_type = eligible[i]->invariants() == eligible[j]->invariants();
      Verdict expected = same_type ? Verdict::SameType : Verdict::Distinguished;
      if (m.verdicts[i][j] != expected)
        throw Error("pair (" + m.labels[i] + ", " + m.labels[j] + ") verdict disagrees with " +
                    "parameter-level isomorphism");
      if (m.verdicts[i][j] == Verdict::Distinguished) ++distinguished;
    }
  }
  size_t pairs = eligible.size() * (eligible.size() - 1) / 2;
  return std::to_string(eligible.size()) + " groups, " + std::to_string(pairs) + " pairs, " +
         std::to_string(distinguished) + " distinguished; matches parameter-level isomorphism";
}

struct CheckDef {
  CheckInfo info;
  // empty string = applicable; otherwise the skip reason
  std::function<std::string(const PGroup&)> skip;
  std::function<std::string(const PGroup&, const CheckConfig&)> run;
};

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> defs = {
      {{"brauer", "commutator_subspace_test, commutator_subspace"},
       [](const PGroup&) { return std::string(); },
       run_brauer},
      {{"huppert", "unit_power_sums"}, nullptr, nullptr},
      {{"center-eq2", "center_of_v, center_subspace"},
       [](const PGroup& g) {
         std::string s = skip_odd_derived(g);
         return s.empty() && g.abelian() ? "abelian" : s;
       },
       run_center_eq2},
      {{"center-eq3", "center_of_v, central_unit_factor"},
       [](const PGroup& g) {
         std::string s = skip_odd_derived(g);
         return s.empty() && g.abelian() ? "abelian" : s;
       },
       run_center_eq3},
      {{"lemma-abp", "frobenius_expansion, power"},
       [](const PGroup& g) {
         if (g.abelian()) return std::string("abelian");
         return skip_odd_derived(g);
       },
       run_lemma_abp},
      {{"lemma-center", "pth_power_centrality"}, skip_odd_derived, run_lemma_center},
      {{"eq-p2", "p2_power_identity"}, skip_odd_derived, run_eq_p2},
      {{"exp-v", "predicted_exponent_v, unit_order"},
       [](const PGroup& g) {
         if (g.abelian()) return std::string("abelian");
         return skip_odd_derived(g);
       },
       run_exp_v},
      {{"vp-witness", "vp_witness"}, skip_odd_frattini, run_vp_witness},
      {{"vp-decomp", "vp_decomposition, vp_membership"}, skip_odd_frattini, run_vp_decomp},
      {{"johnson", "intersection_g_vp"},
       [](const PGroup& g) {
         if (g.p() == 2) return std::string("p = 2");
         if (g.abelian()) return std::string();  // commutative Frobenius route
         return skip_odd_frattini(g);
       },
       run_johnson},
      {{"comm-exp", "commutator_exponent_sample"},
       [](const PGroup& g) {
         return g.commutator_subgroup().order() <= g.p() ? std::string() : "|G'| > p";
       },
       run_comm_exp},
      {{"recognizer",
        "v_invariants, recover_group_invariants, classify_kyl, rebuild_from_kyl"},
       [](const PGroup& g) {
         std::string why;
         return satisfies_theorem_hypotheses(g, &why) ? std::string() : why;
       },
       run_recognizer},
      {{"berman", "berman_matrix, distinguish"}, nullptr, nullptr},
  };
  return defs;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& def : check_table()) v.push_back(def.info);
    return v;
  }();
  return infos;
}

bool known_check(const std::string& id) {
  for (const auto& info : check_registry())
    if (id == info.id) return true;
  return false;
}

std::vector<VerificationReport> run_checks(const std::vector<std::string>& selection,
                                           const CheckConfig& cfg) {
  std::vector<std::string> selected = selection;
  if (selected.empty() || (selected.size() == 1 && selected[0] == "all")) {
    selected.clear();
    for (const auto& info : check_registry()) selected.push_back(info.id);
  }
  for (const auto& id : selected)
    if (!known_check(id)) throw PreconditionError("unknown check id '" + id + "'");

  std::vector<GroupEntry> groups = build_groups(cfg);

  // Tasks are generated in canonical report order, then executed in parallel;
  // results land by index, so scheduling cannot reorder the report.
  struct Task {
    const CheckDef* def;
    const GroupEntry* entry;  // null for aggregate tasks
    int huppert_p = 0;
    int berman_p = 0;
  };
  std::vector<Task> tasks;
  for (const auto& def : check_table()) {
    if (std::find(selected.begin(), selected.end(), def.info.id) == selected.end()) continue;
    if (std::string(def.info.id) == "huppert") {
      for (int p : {3, 5, 7, 11, 13}) tasks.push_back({&def, nullptr, p, 0});
    } else if (std::string(def.info.id) == "berman") {
      for (int p : {3, 5, 7}) {
        if (cfg.p_filter && *cfg.p_filter != p) continue;
        bool have = std::any_of(groups.begin(), groups.end(),
                                [&](const GroupEntry& e) { return e.catalog_p == p; });
        if (have) tasks.push_back({&def, nullptr, 0, p});
      }
    } else {
      for (const auto& entry : groups) tasks.push_back({&def, &entry, 0, 0});
    }
  }

  std::vector<VerificationReport> reports(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    VerificationReport& r = reports[i];
    r.check = task.def->info.id;
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    try {
      if (task.huppert_p) {
        r.group = "U(F_" + std::to_string(task.huppert_p) + ")";
        r.detail = run_huppert(task.huppert_p);
        r.status = CheckStatus::Pass;
      } else if (task.berman_p) {
        r.group = "catalog(p=" + std::to_string(task.berman_p) + ")";
        std::vector<const PGroup*> eligible;
        for (const auto& entry : groups)
          if (entry.catalog_p == task.berman_p && satisfies_theorem_hypotheses(*entry.group))
            eligible.push_back(entry.group.get());
        r.detail = run_berman(eligible);
        r.status = CheckStatus::Pass;
      } else {
        r.group = task.entry->label;
        std::string reason = task.def->skip(*task.entry->group);
        if (!reason.empty()) {
          r.status = CheckStatus::Skipped;
          r.detail = "precondition: " + reason;
        } else {
          r.detail = task.def->run(*task.entry->group, cfg);
          r.status = CheckStatus::Pass;
        }
      }
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
  }
  return reports;
}

std::string render_report_line(const VerificationReport& r) {
  const char* status = r.status == CheckStatus::Pass   ? "pass"
                       : r.status == CheckStatus::Fail ? "fail"
                                                       : "skipped-precondition";
  return "check=" + r.check + " group=" + r.group + " status=" + status +
         " seed=" + std::to_string(r.seed) + " samples=" + std::to_string(r.samples) +
         " detail=" + r.detail;
}

std::string render_report(const std::vector<VerificationReport>& reports) {
  std::string out;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    out += render_report_line(r);
    out += '\n';
    (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : skipped)++;
  }
  out += "summary pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
         " skipped=" + std::to_string(skipped) + "\n";
  return out;
}

int report_exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace unitlab
