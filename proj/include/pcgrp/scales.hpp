#pragma once
// Floor-division voice mapping, its step map on realized tuples, the
// root-position-seventh rotation with flats, the letter-flattening cycle,
// fifth-fall bijections mod 7, and nested generated-scale orbits.
#include <map>

#include "pcgrp/star.hpp"

namespace pcgrp {

// floor((c*k + m) / d), exact for negative numerators.
long j_fn(int c, int d, long m, long k);

// Entrywise j_fn over a segment, raw values.
std::vector<long> j_seg(int c, int d, long m, const Seg& ks);

// Entrywise j_fn reduced mod c.
Seg j_seg_mod(int c, int d, long m, const Seg& ks);

// (j_fn(7,4,m,k) mod 7) for k = 0..3.
Seg phi_realize(int m);

// The 28 distinct realized tuples, m ascending from 0.
std::vector<Seg> phi_tuples();

// Steps a realized tuple to the one at m-1; rejects unknown tuples.
Seg phi_map(const Seg& t);

// Root-position seventh-chord templates over Z12; root is the first entry.
// Returns "" when the segment matches none of the four shapes.
std::string seventh_name(const Seg& s);

// M7 -> dominant -> m7 -> half-diminished on the same root, then down a
// semitone back to M7; rejects segments outside the four shapes.
Seg fbar_flat(const Seg& s);

struct FlatteningStep {
  int index = 0;  // 1-based count of letters flattened so far
  char letter = 0;
  bool productive = false;
  Seg pcseg;          // the CEGB chord after this flattening
  std::string chord;  // seventh_name of pcseg
};

// Flatten letters in the order B,E,A,D,G,C,F cyclically, tracking the
// four-voice chord spelled C,E,G,B; stops when the chord and every
// accidental count return to the start (mod 12).
std::vector<FlatteningStep> flattening_cycle(
    const std::map<char, int>& start_accidentals = {});

// Two-block stars mod 7 whose meta-rotation is the fifth-fall bijection:
// 1: <n,n+2,n+4,n+6> <-> <n,n+2,n+3,n+5>
// 2: <n,n+2,n+4,n+5> <-> <n,n+1,n+3,n+5>
// 3: <n,n+2,n+4,n+6> <-> <n,n+4,n+6,n+2>
Star fifthfall_star(int which);

// The four nested segments grown from <5,0,7> by the scales meta-rotation.
std::vector<Seg> generated_scales_chain();

Star generated_scales_star();
Star tetractys_rotation_star();

}  // namespace pcgrp
