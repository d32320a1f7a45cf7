#include <stdexcept>

#include "doctest.h"
#include "pcgrp/extension.hpp"
#include "pcgrp/progression.hpp"
#include "pcgrp/transforms.hpp"

using namespace pcgrp;

static std::vector<NamedPerm> ti_gens(const Universe& u) {
  return {{"T1", ti_perm(u, {'T', 1})}, {"I0", ti_perm(u, {'I', 0})}};
}

TEST_CASE("two-class equivariant extension") {
  Star jazz = build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true);
  Extension e = extend_equivariant(jazz, ti_gens(jazz.u));
  CHECK(e.sub.order() == 24);
  CHECK(e.full.order() == 48);
  CHECK(e.report.all_pass());
  CHECK(is_simply_transitive(e.full, jazz.u.N));
  CHECK(group_report(e)["structure"] == "direct");

  // A plain group on a multi-block scope is not transitive; its report says so.
  Extension p2 = plain_group(jazz, ti_gens(jazz.u));
  CHECK_FALSE(p2.has_fbar);
  CHECK(p2.full.order() == 24);
  CHECK_FALSE(p2.report.all_pass());
  CHECK(p2.report.first_failure() == "simply transitive");
  CHECK(group_report(p2)["structure"] == "none");

  Star tri = build_star({{0, 4, 7}}, 12, true);
  Extension p = plain_group(tri, ti_gens(tri.u));
  CHECK_FALSE(p.has_fbar);
  CHECK(p.full.order() == 24);
  CHECK(p.report.all_pass());
  CHECK(group_report(p)["structure"] == "none");
}

TEST_CASE("dual pairs with the contextual closure") {
  Star jazz = build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true);
  Extension e = extend_equivariant(jazz, ti_gens(jazz.u));
  Extension d = dual_extension(e);
  CHECK(d.full.order() == 48);
  CHECK(d.report.all_pass());
  CHECK(groups_commute(e.full, d.full));

  std::vector<NamedPerm> plr = {{"P", eval_transform("P", jazz)},
                                {"L", eval_transform("L", jazz)},
                                {"R", eval_transform("R", jazz)}};
  Extension h = extend_equivariant(jazz, plr);
  CHECK(h.full.order() == 48);
  CHECK(h.report.all_pass());
  CHECK(same_element_set(h.full, d.full));
  CHECK(groups_commute(e.full, h.full));

  // The unique elements carrying the a-minor triad to F7 in each group.
  int from = jazz.u.find({4, 0, 9});
  int to = jazz.u.find({5, 9, 0, 3});
  const Perm* eg = unique_transform(e.full, from, to);
  REQUIRE(eg != nullptr);
  CHECK(canonical_label(e, *eg) == "I9*fbar");
  const Perm* hg = unique_transform(h.full, from, to);
  REQUIRE(hg != nullptr);
  CHECK(*word_of(h.full, *hg) == "L*fbar");
  CHECK(*eg != *hg);
}

TEST_CASE("anti-equivariant reconstruction on one orbit") {
  Star tri = build_star({{0, 4, 7}}, 12, true);
  NamedPerm t1{"T1", ti_perm(tri.u, {'T', 1})};
  NamedPerm i0{"I0", ti_perm(tri.u, {'I', 0})};
  Extension a = extend_anti(tri, {t1}, i0);
  CHECK(a.report.all_pass());
  CHECK(a.sub.order() == 12);
  CHECK(a.full.order() == 24);
  CHECK(group_report(a)["structure"] == "semidirect");
  CHECK(compose(i0.second, compose(t1.second, perm_inverse(i0.second))) ==
        perm_inverse(t1.second));
}

TEST_CASE("anti-equivariant dual hypothesis sets") {
  Star tri = build_star({{0, 4, 7}}, 12, true);
  Perm t1 = ti_perm(tri.u, {'T', 1});
  Perm i0 = ti_perm(tri.u, {'I', 0});
  Perm P = kij_perm(tri.u, 1, 3);
  Perm L = kij_perm(tri.u, 2, 3);
  Perm R = kij_perm(tri.u, 1, 2);
  Perm q1 = schritt_perm(tri.u, 1);

  Group g = closure({{"T1", t1}});
  Group h1 = closure({{"LR", compose(L, R)}});
  CHECK(anti_dual_hypotheses(g, i0, h1, R).all_pass());
  Group h2 = closure({{"Q1", q1}});
  CHECK(anti_dual_hypotheses(g, i0, h2, P).all_pass());

  Group lrR = closure({{"LR", compose(L, R)}, {"R", R}});
  Group q1P = closure({{"Q1", q1}, {"P", P}});
  CHECK(lrR.order() == 24);
  CHECK(q1P.order() == 24);
  CHECK(is_simply_transitive(lrR, 24));
  CHECK(is_simply_transitive(q1P, 24));
  Group ti = closure(ti_gens(tri.u));
  CHECK(groups_commute(ti, lrR));
  CHECK(groups_commute(ti, q1P));
  CHECK(same_element_set(lrR, q1P));
}

TEST_CASE("contextual inversion subgroups by segment shape") {
  auto sub = [](const Seg& s) {
    Universe u = single_orbit_universe(s, 12, true);
    return std::pair<Group, Perm>(contextual_inversion_subgroup(u), schritt_perm(u, 1));
  };
  auto [kTri, q1Tri] = sub({0, 4, 7});
  CHECK(kTri.order() == 24);
  CHECK(kTri.contains(q1Tri));
  auto [kDom, q1Dom] = sub({0, 4, 7, 10});
  CHECK(kDom.order() == 24);
  CHECK(kDom.contains(q1Dom));
  auto [kDimTri, q1DimTri] = sub({1, 4, 7});
  CHECK(kDimTri.order() == 8);
  CHECK_FALSE(kDimTri.contains(q1DimTri));
  auto [kDim7, q1Dim7] = sub({1, 4, 7, 10});
  CHECK(kDim7.order() == 8);
  CHECK_FALSE(kDim7.contains(q1Dim7));

  Star jazz = build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true);
  CHECK_THROWS_AS((void)contextual_inversion_subgroup(jazz.u), std::invalid_argument);
}

TEST_CASE("schritt plus second-note inversion centralizes the dominant action") {
  Star dom = build_star({{0, 4, 7, 10}}, 12, true);
  Group gk = closure({{"Q1", schritt_perm(dom.u, 1)}, {"K1,2", kij_perm(dom.u, 1, 2)}});
  CHECK(gk.order() == 24);
  CHECK(is_simply_transitive(gk, 24));
  Group ti = closure(ti_gens(dom.u));
  CHECK(same_element_set(centralizer_group(ti, 24), gk));
  CHECK(same_element_set(centralizer_group(gk, 24), ti));
}

TEST_CASE("wider stars keep every structural clause") {
  Star s4 = build_star({{0, 4, 7}, {0, 4, 7, 11}, {0, 4, 7, 10}, {0, 4, 7, 9}}, 12, true);
  Extension e4 = extend_equivariant(s4, ti_gens(s4.u));
  CHECK(e4.full.order() == 96);
  CHECK(perm_order(e4.fbar) == 4);
  CHECK(e4.report.all_pass());
  CHECK(is_simply_transitive(e4.full, s4.u.N));
  Extension d4 = dual_extension(e4);
  CHECK(d4.report.all_pass());
  CHECK(groups_commute(e4.full, d4.full));

  Star s5 =
      build_star({{0, 4, 7}, {0, 4, 7, 11}, {0, 4, 7, 10}, {0, 4, 7, 9}, {1, 4, 7, 10}}, 12, true);
  Extension e5 = extend_equivariant(s5, ti_gens(s5.u));
  CHECK(e5.full.order() == 120);
  CHECK(perm_order(e5.fbar) == 5);
  CHECK(e5.report.all_pass());
  Perm mixed = compose(ti_perm(s5.u, {'T', 4}), perm_power(e5.fbar, 2));
  auto [g, i] = canonical_decompose(e5, mixed);
  CHECK(i == 2);
  CHECK(g == ti_perm(s5.u, {'T', 4}));
  CHECK_THROWS_AS((void)canonical_decompose(e5, identity_perm(3)), std::invalid_argument);

  Star s3 = build_star({{0, 4, 7}, {0, 4, 7, 9}, {0, 4, 7, 10}}, 12, true);
  Extension e3 = extend_equivariant(s3, ti_gens(s3.u));
  CHECK(e3.full.order() == 72);
  CHECK(perm_order(e3.fbar) == 3);
  CHECK(e3.report.all_pass());
  CHECK(dual_extension(e3).report.all_pass());

  Star m7 = build_star({{0, 2, 4}, {0, 2, 4, 6}}, 7, true);
  Extension em = extend_equivariant(m7, ti_gens(m7.u));
  CHECK(em.full.order() == 28);
  CHECK(em.report.all_pass());
  CHECK(is_simply_transitive(em.full, m7.u.N));
}
