#include <doctest.h>

#include "test_util.hpp"
#include "unitlab/recognizer.hpp"
#include "unitlab/spec_dsl.hpp"

using namespace unitlab;
using namespace testutil;

TEST_CASE("unit invariants of the small catalog") {
  PGroup e27 = build_extraspecial(Prime(3), ExtraspecialExp::P);
  UnitInvariants u1 = v_invariants(e27);
  CHECK(u1.p == 3);
  CHECK(u1.dimension == 27);
  CHECK(u1.log_center_order == 10);
  CHECK(u1.center_exponent == 3);
  CHECK(u1.v_exponent == 9);
  CHECK(u1.log_vp_order == 8);

  UnitInvariants u2 = v_invariants(build_modular_maximal_cyclic(Prime(3), 3));
  CHECK(u2.log_vp_order == 10);
  CHECK(u2.v_exponent == 9);
  CHECK(u2.center_exponent == 3);

  UnitInvariants u3 = v_invariants(build_modular_maximal_cyclic(Prime(3), 4));
  CHECK(u3.dimension == 81);
  CHECK(u3.log_center_order == 32);
  CHECK(u3.center_exponent == 9);
  CHECK(u3.v_exponent == 27);
  CHECK_FALSE(u3.log_vp_order.has_value());
}

TEST_CASE("recovering group invariants from the unit side") {
  UnitInvariants a{3, 27, 10, 3, 9, 8};
  CHECK(recover_group_invariants(a) == GroupInvariants{27, 3, 3, 3});

  UnitInvariants b{3, 27, 10, 3, 9, 10};
  CHECK(recover_group_invariants(b) == GroupInvariants{27, 9, 3, 3});

  UnitInvariants c{3, 81, 32, 9, 27, std::nullopt};
  CHECK(recover_group_invariants(c) == GroupInvariants{81, 27, 9, 9});

  // inconsistent tuples are rejected
  UnitInvariants bad_center{3, 27, 11, 3, 9, 8};  // |center| would not be integral
  CHECK_THROWS_AS(recover_group_invariants(bad_center), PreconditionError);
  UnitInvariants bad_vp{3, 27, 10, 3, 9, 9};  // outside {t, t+p-1}
  CHECK_THROWS_AS(recover_group_invariants(bad_vp), PreconditionError);
  UnitInvariants missing_vp{3, 27, 10, 3, 9, std::nullopt};
  CHECK_THROWS_AS(recover_group_invariants(missing_vp), PreconditionError);
}

TEST_CASE("the exp V = p^2 decision flips with log|V^p|") {
  // t = 8 for the order-27 groups with |center| = 3
  UnitInvariants low{3, 27, 10, 3, 9, 8};
  UnitInvariants high{3, 27, 10, 3, 9, 10};
  CHECK(recover_group_invariants(low).exponent == 3);
  CHECK(recover_group_invariants(high).exponent == 9);
}

TEST_CASE("Kovacs parameters from invariants") {
  KYLParams k1 = classify_kyl(GroupInvariants{27, 3, 3, 3}, Prime(3));
  CHECK(k1.e_order == 1);
  CHECK(k1.k_order == 27);
  CHECK(k1.k_kind == KKind::ExtraspecialExpP);
  CHECK(k1.l_order == 3);
  CHECK(k1.l_kind == LKind::Cyclic);  // degenerate order-p L collapses into K

  KYLParams k2 = classify_kyl(GroupInvariants{27, 9, 3, 3}, Prime(3));
  CHECK(k2.e_order == 1);
  CHECK(k2.k_order == 3);
  CHECK(k2.k_kind == KKind::TrivialOrCp);
  CHECK(k2.l_order == 27);
  CHECK(k2.l_kind == LKind::Modular);

  KYLParams k3 = classify_kyl(GroupInvariants{81, 9, 9, 9}, Prime(3));
  CHECK(k3.e_order == 1);
  CHECK(k3.k_order == 27);
  CHECK(k3.l_order == 9);
  CHECK(k3.l_kind == LKind::Cyclic);

  KYLParams k4 = classify_kyl(GroupInvariants{81, 3, 9, 3}, Prime(3));
  CHECK(k4.e_order == 3);
  CHECK(k4.k_order == 27);
  CHECK(k4.l_order == 3);

  CHECK_THROWS_AS(classify_kyl(GroupInvariants{27, 3, 3, 3}, Prime(2)), PrimeTwoError);
  // non-p-power intermediates signal a hypothesis violation
  CHECK_THROWS_AS(classify_kyl(GroupInvariants{24, 3, 3, 3}, Prime(3)), PreconditionError);
}

TEST_CASE("rebuild consistency over the catalog") {
  for (const char* text :
       {"extraspecial(3,p)", "modular(3,3)", "modular(3,4)", "extraspecial(3,p)xcyclic(3,1)",
        "central(extraspecial(3,p),cyclic(3,2))", "modular(3,3)xcyclic(3,1)", "extraspecial(5,p)",
        "modular(5,3)"}) {
    PGroup g = evaluate(parse_group_spec(text));
    GroupInvariants gi = g.invariants();
    KYLParams params = classify_kyl(gi, g.prime());
    PGroup rebuilt = rebuild_from_kyl(params, g.prime());
    CHECK(rebuilt.invariants() == gi);
  }
}

TEST_CASE("round trip: v_invariants then recovery equals brute force") {
  for (const char* text :
       {"extraspecial(3,p)", "modular(3,3)", "modular(3,4)", "extraspecial(3,p)xcyclic(3,1)",
        "central(extraspecial(3,p),cyclic(3,2))", "modular(3,3)xcyclic(3,1)"}) {
    PGroup g = evaluate(parse_group_spec(text));
    CHECK(recover_group_invariants(v_invariants(g)) == g.invariants());
  }
}

TEST_CASE("center-order formula inversion is integral over the catalog") {
  for (const char* text : {"extraspecial(3,p)", "modular(3,3)", "extraspecial(3,p)xcyclic(3,1)",
                           "extraspecial(5,p)", "modular(5,3)"}) {
    PGroup g = evaluate(parse_group_spec(text));
    UnitInvariants ui = v_invariants(g);
    CHECK((g.p() * ui.log_center_order - ui.dimension + g.p()) % (g.p() - 1) == 0);
  }
}

TEST_CASE("v_invariants survive relabeling") {
  PGroup m27 = build_modular_maximal_cyclic(Prime(3), 3);
  UnitInvariants base = v_invariants(m27);
  for (uint64_t seed : {5u, 6u}) {
    PGroup shuffled = relabel(m27, random_relabeling(m27, seed));
    CHECK(v_invariants(shuffled) == base);
  }
}

TEST_CASE("the |K| reading of the decomposition clause") {
  // modular groups sit in the non-cyclic-L branch where the clause applies
  KYLReadingReport r = validate_kyl_reading(build_modular_maximal_cyclic(Prime(3), 3));
  CHECK(r.corrected_consistent);
  CHECK_FALSE(r.literal_consistent);

  KYLReadingReport r2 = validate_kyl_reading(build_extraspecial(Prime(3), ExtraspecialExp::P));
  CHECK(r2.corrected_consistent);  // cyclic-L branch, clause not exercised
}

TEST_CASE("distinguish") {
  PGroup e27 = build_extraspecial(Prime(3), ExtraspecialExp::P);
  PGroup m27 = build_modular_maximal_cyclic(Prime(3), 3);

  DistinguishResult d1 = distinguish(e27, m27);
  CHECK(d1.verdict == Verdict::Distinguished);
  CHECK(d1.reason == "log|V^p| 8 vs 10");

  DistinguishResult d2 = distinguish(e27, e27);
  CHECK(d2.verdict == Verdict::SameType);

  PGroup e27xc3 = evaluate(parse_group_spec("extraspecial(3,p)xcyclic(3,1)"));
  PGroup e27yc9 = evaluate(parse_group_spec("central(extraspecial(3,p),cyclic(3,2))"));
  DistinguishResult d3 = distinguish(e27xc3, e27yc9);
  CHECK(d3.verdict == Verdict::Distinguished);
  CHECK(d3.reason == "exp center(V) 3 vs 9");

  // constructions of the same parameters are same-type
  PGroup e27_again = evaluate(parse_group_spec("central(extraspecial(3,p),cyclic(3,1))"));
  CHECK(e27_again.order() == 27);
  CHECK(distinguish(e27, e27_again).verdict == Verdict::SameType);

  CHECK_THROWS_AS(distinguish(e27, build_elementary_abelian(Prime(3), 3)), PreconditionError);
  CHECK_THROWS_AS(distinguish(e27, build_extraspecial(Prime(5), ExtraspecialExp::P)),
                  PreconditionError);
  PGroup d8 = build_dihedral8();
  CHECK_THROWS_AS(distinguish(d8, d8), PreconditionError);
}

TEST_CASE("the subtle pair at p = 7") {
  PGroup e343 = build_extraspecial(Prime(7), ExtraspecialExp::P);
  PGroup m343 = build_modular_maximal_cyclic(Prime(7), 3);
  DistinguishResult d = distinguish(e343, m343);
  CHECK(d.verdict == Verdict::Distinguished);
  CHECK(d.reason == "log|V^p| 48 vs 54");
  CHECK(d.left.log_center_order == (343 + 6 * 7 - 7) / 7);
  CHECK(d.left.v_exponent == 49);
  CHECK(d.right.v_exponent == 49);
}

TEST_CASE("berman matrix") {
  PGroup e27 = build_extraspecial(Prime(3), ExtraspecialExp::P);
  PGroup m27 = build_modular_maximal_cyclic(Prime(3), 3);
  PGroup m81 = build_modular_maximal_cyclic(Prime(3), 4);
  PGroup e27_again = evaluate(parse_group_spec("central(extraspecial(3,p),cyclic(3,1))"));

  BermanMatrix single = berman_matrix({&e27});
  CHECK(single.verdicts.size() == 1);
  CHECK(single.verdicts[0][0] == Verdict::SameType);

  BermanMatrix m = berman_matrix({&e27, &m27, &m81, &e27_again});
  for (size_t i = 0; i < 4; ++i) CHECK(m.verdicts[i][i] == Verdict::SameType);
  CHECK(m.verdicts[0][1] == Verdict::Distinguished);
  CHECK(m.verdicts[0][2] == Verdict::Distinguished);
  CHECK(m.verdicts[1][2] == Verdict::Distinguished);
  CHECK(m.verdicts[0][3] == Verdict::SameType);  // same parameters, different construction
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(m.verdicts[i][j] == m.verdicts[j][i]);
}
