#pragma once
// Orbit blocks with T/I provenance and disjoint unions of blocks.
#include <map>
#include <utility>

#include "pcgrp/base.hpp"

namespace pcgrp {

// One orbit, stored in canonical order: T-forms by n ascending, then I-forms
// by n ascending, duplicates kept once at first occurrence. Provenance (which
// T_n or I_n reached each element from the generator) is stored because the
// Schritte need it even when a symmetric pc-set hides it.
struct Block {
  int c = 0;
  std::vector<Seg> elems;
  std::vector<char> kind;  // 'T' or 'I'
  std::vector<int> idx;    // n of the generating TI element
  std::map<Seg, int> pos;

  int find(const Seg& s) const;  // -1 when absent
};

Block build_orbit(const Seg& gen, int c, bool with_inversions);

// Disjoint union of blocks, indexed by flat positions.
struct Universe {
  std::vector<Block> blocks;
  std::vector<int> base;  // flat index of each block start
  int N = 0;

  void finish();
  int flat(int bi, int p) const { return base[bi] + p; }
  std::pair<int, int> loc(int f) const;  // (block, position)
  int find(const Seg& s) const;          // -1 when absent
  const Seg& seg(int f) const;
  char kind(int f) const;
  int c() const { return blocks.empty() ? 0 : blocks[0].c; }
};

Universe single_orbit_universe(const Seg& gen, int c, bool with_inversions);

}  // namespace pcgrp
