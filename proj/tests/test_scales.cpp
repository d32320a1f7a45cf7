#include <numeric>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "pcgrp/scales.hpp"

using namespace pcgrp;

TEST_CASE("floor-division voice mapping") {
  CHECK(j_fn(7, 4, 3, 0) == 0);
  CHECK(j_fn(7, 4, 3, 3) == 6);
  CHECK(j_fn(12, 7, 0, -1) == -2);
  CHECK(j_fn(7, 4, -1, 0) == -1);
  CHECK(j_seg(7, 4, 3, {0, 1, 2, 3}) == std::vector<long>{0, 2, 4, 6});
  CHECK(j_seg_mod(12, 7, 0, {0, 2, 4, 6}) == Seg{0, 3, 6, 10});
}

TEST_CASE("step map on realized tuples") {
  auto tuples = phi_tuples();
  REQUIRE(tuples.size() == 28);
  std::set<Seg> distinct(tuples.begin(), tuples.end());
  CHECK(distinct.size() == 28);
  CHECK(phi_realize(3) == Seg{0, 2, 4, 6});

  for (int m = 0; m < 28; ++m)
    CHECK(phi_map(phi_realize(m)) == phi_realize(m - 1));

  Seg x = phi_realize(3);
  int steps = 0;
  do {
    x = phi_map(x);
    ++steps;
  } while (x != phi_realize(3) && steps < 100);
  CHECK(steps == 28);

  for (int m = 0; m < 28; ++m) {
    Seg a = phi_realize(m);
    CHECK(phi_realize(m - 14) == Seg{a[2], a[3], a[0], a[1]});
  }
  CHECK_THROWS_AS((void)phi_map({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("root-position seventh names") {
  CHECK(seventh_name({0, 4, 7, 11}) == "CM7");
  CHECK(seventh_name({0, 4, 7, 10}) == "C7");
  CHECK(seventh_name({0, 3, 7, 10}) == "Cm7");
  CHECK(seventh_name({0, 3, 6, 10}) == "Ch7");
  CHECK(seventh_name({10, 2, 5, 9}) == "BbM7");
  CHECK(seventh_name({0, 4, 7, 9}) == "");
  CHECK(seventh_name({0, 4, 7}) == "");
}

TEST_CASE("quality-walk rotation covers all 48 sevenths") {
  CHECK(fbar_flat({0, 4, 7, 11}) == Seg{0, 4, 7, 10});
  CHECK(fbar_flat({0, 4, 7, 10}) == Seg{0, 3, 7, 10});
  CHECK(fbar_flat({0, 3, 7, 10}) == Seg{0, 3, 6, 10});
  CHECK(fbar_flat({0, 3, 6, 10}) == Seg{11, 3, 6, 10});
  CHECK_THROWS_AS((void)fbar_flat({0, 4, 7, 9}), std::invalid_argument);

  Seg x = {0, 4, 7, 11};
  std::set<Seg> seen;
  int steps = 0;
  do {
    seen.insert(x);
    x = fbar_flat(x);
    ++steps;
  } while (x != Seg{0, 4, 7, 11} && steps < 1000);
  CHECK(steps == 48);
  CHECK(seen.size() == 48);
}

TEST_CASE("letter flattening closes after twelve rounds") {
  auto steps = flattening_cycle();
  REQUIRE(steps.size() == 84);

  int productive = 0;
  std::set<Seg> distinct;
  for (const auto& st : steps) {
    if (st.productive) ++productive;
    distinct.insert(st.pcseg);
    CHECK(j_seg_mod(12, 7, 5 - st.index, {0, 2, 4, 6}) == st.pcseg);
    CHECK(st.chord == seventh_name(st.pcseg));
    CHECK_FALSE(st.chord.empty());
  }
  CHECK(productive == 48);
  CHECK(distinct.size() == 48);

  CHECK(steps[0].letter == 'B');
  CHECK(steps[0].productive);
  CHECK(steps[0].pcseg == Seg{0, 4, 7, 10});
  CHECK(steps[0].chord == "C7");
  CHECK(steps[1].chord == "Cm7");
  CHECK_FALSE(steps[2].productive);
  CHECK(steps[4].chord == "Ch7");
  CHECK(steps[5].pcseg == Seg{11, 3, 6, 10});
  CHECK(steps[5].chord == "BM7");
  CHECK(steps.back().index == 84);
  CHECK(steps.back().letter == 'F');
  CHECK(steps.back().pcseg == Seg{0, 4, 7, 11});

  Seg before = {0, 4, 7, 11};
  for (const auto& st : steps) {
    if (st.productive) CHECK(fbar_flat(before) == st.pcseg);
    before = st.pcseg;
  }
}

TEST_CASE("flattening from a displaced start still closes") {
  auto steps = flattening_cycle({{'B', -1}});
  CHECK(steps.size() == 84);
  CHECK(steps.back().pcseg == Seg{0, 4, 7, 10});
  CHECK_THROWS_AS((void)flattening_cycle({{'X', 0}}), std::invalid_argument);
}

TEST_CASE("fifth-fall bijections have order fourteen with the falling step") {
  for (int which : {1, 2}) {
    Star s = fifthfall_star(which);
    CHECK(s.u.N == 14);
    Perm op = compose(ti_perm(s.u, {'T', 6}), meta_rotation(s));
    CHECK(perm_order(op) == 14);
  }
  Star s3 = fifthfall_star(3);
  Perm op3 = compose(ti_perm(s3.u, {'T', 3}), meta_rotation(s3));
  CHECK(perm_order(op3) == 14);

  int at = s3.u.find({0, 2, 4, 6});
  REQUIRE(at >= 0);
  const int start = at;
  const Seg expect[] = {{3, 0, 2, 5}, {6, 1, 3, 5}, {2, 6, 1, 4}, {5, 0, 2, 4}};
  std::set<Seg> seen{{0, 2, 4, 6}};
  for (int k = 0; k < 14; ++k) {
    at = op3[at];
    if (k < 4) CHECK(s3.u.seg(at) == expect[k]);
    seen.insert(s3.u.seg(at));
  }
  CHECK(at == start);
  CHECK(seen.size() == 14);

  CHECK_THROWS_AS((void)fifthfall_star(4), std::invalid_argument);
}

TEST_CASE("second-note inversion is retrograde after a fourth down, mod 7") {
  for (int n = 0; n < 7; ++n) {
    Seg y = transpose_seg({0, 2, 4, 6}, n, 7);
    CHECK(contextual_inversion_seg(y, 1, 2, 7) ==
          retrograde_seg(transpose_seg(y, -4, 7)));
  }
}

TEST_CASE("tetractys rotation star") {
  Star rot = tetractys_rotation_star();
  CHECK(rot.u.N == 36);
  Perm f = meta_rotation(rot);
  for (int i = 0; i < rot.u.N; ++i) {
    Seg s = rot.u.seg(i);
    CHECK(rot.u.seg(f[i]) == Seg{s[1], s[2], s[0]});
  }
  CHECK(perm_order(f) == 3);
  Group g = closure({{"T1", ti_perm(rot.u, {'T', 1})}, {"fbar", f}});
  CHECK(g.order() == 36);
}

TEST_CASE("nested generated scales") {
  auto chain = generated_scales_chain();
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == Seg{5, 0, 7});
  CHECK(chain[3].size() == 12);

  Star sc = generated_scales_star();
  CHECK(sc.u.N == 48);
  Perm f = meta_rotation(sc);
  int p0 = sc.u.find({5, 0, 7});
  REQUIRE(p0 >= 0);
  CHECK(sc.u.seg(f[p0]) == Seg{5, 0, 7, 2, 9});
  CHECK(perm_order(f) == 4);

  Group g = closure({{"T1", ti_perm(sc.u, {'T', 1})}, {"fbar", f}});
  CHECK(g.order() == 48);
  CHECK(is_simply_transitive(g, sc.u.N));
  for (const auto& p : g.elems)
    for (const auto& q : g.gens)
      CHECK(compose(p, q.second) == compose(q.second, p));

  std::map<int, int> census = order_census(g);
  std::map<int, int> expect = {{1, 1}, {2, 3}, {3, 2}, {4, 12}, {6, 6}, {12, 24}};
  CHECK(census == expect);
  std::map<int, int> z12z4;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 4; ++b)
      z12z4[std::lcm(12 / std::gcd(a, 12), 4 / std::gcd(b, 4))]++;
  CHECK(census == z12z4);

  CHECK(same_element_set(centralizer_group(g, sc.u.N), g));
}
