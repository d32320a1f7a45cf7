#pragma once
// Equivariant bijections between two orbits: unique extension of a
// single-element assignment, prefix-extension / one-position-modification
// builders, the four triad-to-seventh formula maps, equivariance
// classification, and conjugation of groups across a bijection.
#include "pcgrp/orbit.hpp"
#include "pcgrp/perm.hpp"

namespace pcgrp {

struct OrbitBijection {
  int c = 0;
  Block src, dst;
  Perm table;  // src position -> dst position
  std::string name;

  Seg apply(const Seg& s) const;
  Seg unapply(const Seg& s) const;
  OrbitBijection inverse() const;
};

// The map sending e(srcSeg) to e(dstSeg) for every TI element e (or every
// T_n when with_inversions is false). Requires both orbits full sized so
// the assignment is well defined; verified equivariant after construction.
OrbitBijection extend_assignment(const Seg& srcSeg, const Seg& dstSeg, int c,
                                 bool with_inversions = true);

// dst extends src entrywise as a prefix (equal length allowed); src must
// satisfy the tritone condition. Truncation is the inverse.
OrbitBijection pcseg_extension_bijection(const Seg& src, const Seg& dst, int c);

// Replace the entry at position (1-based) with newPc; the tritone condition
// must hold on both sides.
OrbitBijection pcseg_modification_bijection(const Seg& src, int position, int newPc, int c);

enum class Table2 { Dom7Tr, Maj7Tr, Min7Tr, Dim7Tr };

// Formula-tabulated triad maps: <w,x,y> appends 2y-x (Dom7Tr), x+y-w
// (Maj7Tr), w+x-y (Min7Tr); Dim7Tr gives <2x-y, x, y, 2y-x>. Each is
// cross-checked against the equivariant extension of its first row.
OrbitBijection table2_bijection(Table2 which, bool alt_min7 = false);
Seg table2_formula(Table2 which, const Seg& triad, int c = 12);

enum class Equivariance { equivariant, anti_equivariant, neither };

// Exhaustive classification against a group action given as pairs of
// permutations (action on src positions, same element's action on dst
// positions).
Equivariance check_equivariance(const OrbitBijection& b,
                                const std::vector<std::pair<Perm, Perm>>& action);

// Convenience: the full TI action (or T action) on both blocks.
Equivariance check_equivariance_ti(const OrbitBijection& b, bool with_inversions = true);

// Perms on dst positions: table . g . table^-1 for each g.
std::vector<Perm> conjugate_perms(const OrbitBijection& b, const std::vector<Perm>& gs);
Perm conjugate_perm(const OrbitBijection& b, const Perm& g);

// Single-block permutation builders for assembling actions.
Perm block_ti_perm(const Block& b, TIElement e);
Perm block_schritt(const Block& b, int i);
Perm block_kij(const Block& b, int i, int j);

}  // namespace pcgrp
