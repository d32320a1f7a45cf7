#include <stdexcept>

#include "doctest.h"
#include "pcgrp/transforms.hpp"

using namespace pcgrp;

TEST_CASE("transform grammar") {
  auto one = parse_transform("T3");
  REQUIRE(one.size() == 1);
  CHECK(one[0].base == "T");
  CHECK(one[0].a == 3);
  CHECK(one[0].power == 1);

  auto neg = parse_transform("Q-4");
  CHECK(neg[0].a == -4);

  auto k = parse_transform("K1,4");
  CHECK(k[0].base == "K");
  CHECK(k[0].a == 1);
  CHECK(k[0].b == 4);

  auto f = parse_transform("fbar^2");
  CHECK(f[0].base == "fbar");
  CHECK(f[0].power == 2);

  auto chain = parse_transform(" T1 * I0 ");
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].base == "T");
  CHECK(chain[1].base == "I");

  CHECK_THROWS_AS((void)parse_transform("X3"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_transform("K1"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_transform("T"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_transform("T3^"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_transform("T3x"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_transform(""), std::invalid_argument);
}

TEST_CASE("segment-level images") {
  Seg cmaj{0, 4, 7};
  CHECK(apply_to_seg("P", cmaj, 12) == Seg{7, 3, 0});
  CHECK(apply_to_seg("R", cmaj, 12) == Seg{4, 0, 9});
  CHECK(apply_to_seg("L*R", cmaj, 12) == Seg{5, 9, 0});
  CHECK(apply_to_seg("Q5", cmaj, 12) == Seg{5, 9, 0});
  CHECK(apply_to_seg("Q9", {5, 9, 0, 3}, 12) == Seg{2, 6, 9, 0});
  CHECK(apply_to_seg("T5", {0, 4, 7, 10}, 12) == Seg{5, 9, 0, 3});
  CHECK(apply_to_seg("I0", {0, 4, 7, 10}, 12) == Seg{0, 8, 5, 2});
  CHECK(apply_to_seg("K1,4", {0, 4, 7, 10}, 12) == Seg{10, 6, 3, 0});
  CHECK(apply_to_seg("K3,3", {0, 4, 7, 10}, 12) == Seg{2, 10, 7, 4});
  CHECK(apply_to_seg("Q1^12", cmaj, 12) == cmaj);
  CHECK(apply_to_seg("Q1^-3", cmaj, 12) == apply_to_seg("Q9", cmaj, 12));
  CHECK(apply_to_seg("T1^-1", cmaj, 12) == apply_to_seg("T11", cmaj, 12));
  CHECK_THROWS_AS((void)apply_to_seg("fbar", cmaj, 12), std::invalid_argument);
}

TEST_CASE("star-scope evaluation is blockwise when indices fit") {
  Star dom = build_star({{0, 4, 7, 10}}, 12, true);
  CHECK(eval_transform("P", dom) == kij_perm(dom.u, 1, 3));
  CHECK(eval_transform("L", dom) == kij_perm(dom.u, 2, 3));
  CHECK(eval_transform("R", dom) == kij_perm(dom.u, 1, 2));
  CHECK(eval_transform("Q7", dom) == schritt_perm(dom.u, 7));
  CHECK(eval_transform("T1", dom) == ti_perm(dom.u, {'T', 1}));

  // Fourth-note inversion factors through each shorter inversion and a
  // Schritt on the dominant-seventh orbit.
  Perm k14 = eval_transform("K1,4", dom);
  CHECK(k14 == eval_transform("K1,3*Q3", dom));
  CHECK(k14 == eval_transform("K2,3*Q11", dom));
  CHECK(k14 == eval_transform("K1,2*Q6", dom));
}

TEST_CASE("short-block stars lift long inversions through a reference block") {
  Star jazz = build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true);
  auto k34fn = [](const Seg& s) { return contextual_inversion_seg(s, 3, 4, 12); };
  CHECK(eval_transform("K3,4", jazz) == lift_via_reference(jazz, 1, k34fn));
  CHECK(eval_transform("fbar", jazz) == meta_rotation(jazz));
  CHECK_THROWS_AS((void)eval_transform("K0,1", jazz), std::invalid_argument);
  CHECK_THROWS_AS((void)eval_transform("K5,5", jazz), std::invalid_argument);
}

TEST_CASE("composition reads right to left") {
  Star dom = build_star({{0, 4, 7, 10}}, 12, true);
  Perm lhs = eval_transform("K1,3*Q3", dom);
  Perm manual = compose(eval_transform("K1,3", dom), eval_transform("Q3", dom));
  CHECK(lhs == manual);
  int at = dom.u.find({0, 4, 7, 10});
  // Q3 first: C7 -> Eb7, then first/third-note inversion.
  CHECK(dom.u.seg(eval_transform("Q3", dom)[at]) == Seg{3, 7, 10, 1});
  CHECK(dom.u.seg(lhs[at]) == Seg{10, 6, 3, 0});
}
