#include "pcgrp/orbit.hpp"

#include <stdexcept>

namespace pcgrp {

int Block::find(const Seg& s) const {
  auto it = pos.find(s);
  return it == pos.end() ? -1 : it->second;
}

Block build_orbit(const Seg& gen, int c, bool with_inversions) {
  Block b;
  b.c = c;
  auto add = [&](const Seg& s, char k, int n) {
    if (!b.pos.count(s)) {
      b.pos[s] = (int)b.elems.size();
      b.elems.push_back(s);
      b.kind.push_back(k);
      b.idx.push_back(n);
    }
  };
  for (int n = 0; n < c; ++n) add(transpose_seg(gen, n, c), 'T', n);
  if (with_inversions)
    for (int n = 0; n < c; ++n) add(invert_seg(gen, n, c), 'I', n);
  return b;
}

void Universe::finish() {
  base.clear();
  N = 0;
  for (auto& b : blocks) {
    base.push_back(N);
    N += (int)b.elems.size();
  }
}

std::pair<int, int> Universe::loc(int f) const {
  if (f < 0 || f >= N) throw std::out_of_range("flat index outside universe");
  for (int bi = (int)blocks.size() - 1; bi >= 0; --bi)
    if (f >= base[bi]) return {bi, f - base[bi]};
  throw std::out_of_range("flat index outside universe");
}

int Universe::find(const Seg& s) const {
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    int p = blocks[bi].find(s);
    if (p >= 0) return flat((int)bi, p);
  }
  return -1;
}

const Seg& Universe::seg(int f) const {
  auto [bi, p] = loc(f);
  return blocks[bi].elems[p];
}

char Universe::kind(int f) const {
  auto [bi, p] = loc(f);
  return blocks[bi].kind[p];
}

Universe single_orbit_universe(const Seg& gen, int c, bool with_inversions) {
  Universe u;
  u.blocks.push_back(build_orbit(gen, c, with_inversions));
  u.finish();
  return u;
}

}  // namespace pcgrp
