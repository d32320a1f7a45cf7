#pragma once
// Star-shaped scopes: a center orbit plus equivariant arm bijections into
// further orbits, the block-cycling meta-rotation, and lifts of center
// transformations to the whole disjoint union by arm conjugation.
#include <functional>

#include "pcgrp/orbit.hpp"
#include "pcgrp/perm.hpp"

namespace pcgrp {

struct Star {
  Universe u;
  // arm[j][p] = position in block j of the arm image of center element p;
  // arm[0] is the identity. armInv inverts each arm.
  std::vector<std::vector<int>> arm, armInv;

  int block_count() const { return (int)u.blocks.size(); }
};

// gens[0] generates the center block; each further generator is the single
// arm assignment center-generator -> arm-generator, extended equivariantly.
// Throws when blocks collide or an arm image is missing.
Star build_star(const std::vector<Seg>& gens, int c, bool with_inversions);

// Entrywise T_n / I_n on every block.
Perm ti_perm(const Universe& u, TIElement e);
// Q_i: T_i on T-forms, T_{-i} on I-forms, per block provenance.
Perm schritt_perm(const Universe& u, int i);
// K_{i,j} applied directly on every block; all blocks must be long enough.
Perm kij_perm(const Universe& u, int i, int j);

// Meta-rotation cycling block j to block j+1 through the arms.
Perm meta_rotation(const Star& s);

// Lift of a center-block permutation to the whole star by arm conjugation.
Perm lift_center(const Star& s, const Perm& h0);

// Express a segment function on block `ref` as a center permutation through
// the ref arm, then lift. Used when a formula only makes sense on one block.
Perm lift_via_reference(const Star& s, int ref, const std::function<Seg(const Seg&)>& f);

// Uniform block displacement of p, or -1 when p is not block-uniform.
int block_shift(const Universe& u, const Perm& p);

// Config file: {"modulus": 12, "group": "TI"|"T"|[exprs], "center": "<0,4,7>",
// "arms": ["<0,4,7,10>", ...]}.
struct StarConfig {
  int modulus = 12;
  Seg center;
  std::vector<Seg> arms;
  std::string group_kind;                 // "TI", "T", or "custom"
  std::vector<std::string> custom_gens;   // transform expressions when custom
};

StarConfig load_star_config(const std::string& path);
Star build_star(const StarConfig& cfg);

}  // namespace pcgrp
