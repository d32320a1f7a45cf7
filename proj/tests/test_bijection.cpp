#include <set>
#include <stdexcept>

#include "doctest.h"
#include "pcgrp/bijection.hpp"

using namespace pcgrp;

TEST_CASE("assignments extend uniquely over full orbits") {
  OrbitBijection b = extend_assignment({0, 4, 7}, {0, 4, 7, 10}, 12);
  CHECK(b.apply({5, 9, 0}) == Seg{5, 9, 0, 3});
  CHECK(b.apply({7, 3, 0}) == Seg{7, 3, 0, 9});
  CHECK(b.unapply({7, 3, 0, 9}) == Seg{7, 3, 0});
  CHECK(b.inverse().apply({7, 3, 0, 9}) == Seg{7, 3, 0});
  CHECK(check_equivariance_ti(b) == Equivariance::equivariant);
  CHECK_THROWS_AS((void)b.apply({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)extend_assignment({0, 6}, {0, 4, 7}, 12), std::invalid_argument);
  CHECK_THROWS_AS((void)extend_assignment({0, 4, 7}, {0, 6}, 12), std::invalid_argument);

  OrbitBijection t = extend_assignment({0, 4, 7}, {0, 3, 7}, 12, false);
  CHECK(t.apply({1, 5, 8}) == Seg{1, 4, 8});
  CHECK(check_equivariance_ti(t, false) == Equivariance::equivariant);
}

TEST_CASE("prefix extensions and their guards") {
  OrbitBijection b = pcseg_extension_bijection({0, 4, 7}, {0, 4, 7, 10}, 12);
  CHECK(b.apply({2, 6, 9}) == Seg{2, 6, 9, 0});
  OrbitBijection same = pcseg_extension_bijection({0, 4, 7}, {0, 4, 7}, 12);
  CHECK(same.table == identity_perm(24));
  CHECK_THROWS_AS((void)pcseg_extension_bijection({0, 4, 7}, {0, 4, 8, 10}, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pcseg_extension_bijection({0, 4, 7}, {0, 4}, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pcseg_extension_bijection({0, 6}, {0, 6, 1}, 12),
                  std::invalid_argument);
}

TEST_CASE("one-position modifications") {
  OrbitBijection up = pcseg_modification_bijection({0, 4, 7}, 3, 10, 12);
  CHECK(up.apply({1, 5, 8}) == Seg{1, 5, 11});
  OrbitBijection down = pcseg_modification_bijection({0, 4, 7}, 3, 1, 12);
  CHECK(down.apply({1, 5, 8}) == Seg{1, 5, 2});
  CHECK(conjugate_perm(down, block_schritt(down.src, 5)) == block_schritt(down.dst, 5));
  CHECK_THROWS_AS((void)pcseg_modification_bijection({0, 4, 7}, 0, 10, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pcseg_modification_bijection({0, 4, 7}, 4, 10, 12),
                  std::invalid_argument);
  // <0,4,6> still satisfies the tritone condition, so this one is legal.
  CHECK(pcseg_modification_bijection({0, 4, 7}, 3, 6, 12).apply({0, 4, 7}) ==
        Seg{0, 4, 6});
  // The modified segment <0,6,6> has only unison and tritone intervals.
  CHECK_THROWS_AS((void)pcseg_modification_bijection({0, 6, 7}, 3, 6, 12),
                  std::invalid_argument);
  // The source side is checked the same way.
  CHECK_THROWS_AS((void)pcseg_modification_bijection({0, 6}, 2, 7, 12),
                  std::invalid_argument);
}

TEST_CASE("triad-to-seventh formula maps") {
  CHECK(table2_formula(Table2::Dom7Tr, {0, 4, 7}) == Seg{0, 4, 7, 10});
  CHECK(table2_formula(Table2::Maj7Tr, {0, 4, 7}) == Seg{0, 4, 7, 11});
  CHECK(table2_formula(Table2::Min7Tr, {0, 4, 7}) == Seg{0, 4, 7, 9});
  CHECK(table2_formula(Table2::Dim7Tr, {0, 4, 7}) == Seg{1, 4, 7, 10});
  CHECK_THROWS_AS((void)table2_formula(Table2::Dom7Tr, {0, 4, 7, 10}), std::invalid_argument);

  OrbitBijection m = table2_bijection(Table2::Min7Tr);
  CHECK(m.name == "Min7Tr");
  CHECK(m.apply({4, 0, 9}) == Seg{4, 0, 9, 7});
  OrbitBijection alt = table2_bijection(Table2::Min7Tr, true);
  CHECK(alt.apply({4, 0, 9}) == Seg{9, 0, 4, 7});
  CHECK(alt.apply({0, 4, 7}) == Seg{7, 4, 0, 9});

  OrbitBijection d = table2_bijection(Table2::Dim7Tr);
  CHECK(d.apply({7, 3, 0}) == Seg{6, 3, 0, 9});

  for (Table2 which : {Table2::Dom7Tr, Table2::Maj7Tr, Table2::Min7Tr, Table2::Dim7Tr})
    CHECK(check_equivariance_ti(table2_bijection(which)) == Equivariance::equivariant);
  CHECK(check_equivariance_ti(alt) == Equivariance::equivariant);
}

TEST_CASE("equivariance classification detects all three kinds") {
  Block tb = build_orbit({0, 4, 7}, 12, false);
  OrbitBijection neg;
  neg.c = 12;
  neg.src = tb;
  neg.dst = tb;
  neg.table.resize(12);
  for (int n = 0; n < 12; ++n) neg.table[tb.find(transpose_seg({0, 4, 7}, n, 12))] =
      tb.find(transpose_seg({0, 4, 7}, -n, 12));
  neg.name = "negate";
  std::vector<std::pair<Perm, Perm>> tAction;
  for (int k = 0; k < 12; ++k)
    tAction.push_back({block_ti_perm(tb, {'T', k}), block_ti_perm(tb, {'T', k})});
  CHECK(check_equivariance(neg, tAction) == Equivariance::anti_equivariant);

  OrbitBijection bent = neg;
  bent.table = identity_perm(12);
  std::swap(bent.table[1], bent.table[2]);
  CHECK(check_equivariance(bent, tAction) == Equivariance::neither);

  CHECK(check_equivariance_ti(extend_assignment({0, 4, 7}, {0, 4, 7, 10}, 12)) ==
        Equivariance::equivariant);
}

TEST_CASE("conjugation across the dominant-seventh map preserves contextual structure") {
  OrbitBijection b = table2_bijection(Table2::Dom7Tr);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      CHECK(conjugate_perm(b, block_kij(b.src, i, j)) == block_kij(b.dst, i, j));
  for (int q = 0; q < 12; ++q)
    CHECK(conjugate_perm(b, block_schritt(b.src, q)) == block_schritt(b.dst, q));
}

TEST_CASE("conjugation across the diminished map leaves the contextual family") {
  OrbitBijection b = table2_bijection(Table2::Dim7Tr);
  Perm q = conjugate_perm(b, block_kij(b.src, 1, 3));
  for (int w = 0; w < 12; ++w) {
    Seg in = transpose_seg({1, 4, 7, 10}, w, 12);
    Seg expect = transpose_seg({6, 3, 0, 9}, w, 12);
    CHECK(b.dst.elems[q[b.dst.find(in)]] == expect);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      CHECK(q != block_kij(b.dst, i, j));
}

TEST_CASE("modification conjugates can leave the contextual family entirely") {
  Block sb = build_orbit({0, 4, 10}, 12, true);
  CHECK(compose(block_kij(sb, 2, 3), block_kij(sb, 1, 2)) == block_schritt(sb, 2));

  OrbitBijection m = pcseg_modification_bijection({0, 4, 7}, 3, 10, 12);
  Perm q = conjugate_perm(m, block_kij(m.src, 2, 3));
  for (size_t p = 0; p < m.dst.elems.size(); ++p) {
    std::set<int> a(m.dst.elems[p].begin(), m.dst.elems[p].end());
    bool common = false;
    for (int v : m.dst.elems[q[p]])
      if (a.count(v)) common = true;
    CHECK_FALSE(common);
  }
}
