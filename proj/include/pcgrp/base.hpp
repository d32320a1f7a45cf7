#pragma once
// Pitch-class segments over Z_c and the entrywise T/I action.
#include <optional>
#include <string>
#include <vector>

namespace pcgrp {

using Seg = std::vector<int>;

// Least non-negative residue; works for negative a.
int mod(int a, int c);

Seg transpose_seg(const Seg& s, int n, int c);
Seg invert_seg(const Seg& s, int n, int c);  // entrywise n - x
Seg retrograde_seg(const Seg& s);

// Element of the order-2c transposition/inversion group.
struct TIElement {
  char kind;  // 'T' or 'I'
  int n;      // reduced mod c on construction paths that know c

  Seg apply(const Seg& s, int c) const;
  TIElement compose(const TIElement& rhs, int c) const;  // this after rhs
  TIElement inverse(int c) const;
  std::string name() const;
  bool operator==(const TIElement& o) const { return kind == o.kind && n == o.n; }
};

// True iff some entry pair differs by an interval other than 0 or c/2.
// Guarantees T-forms and I-forms cannot collide, so each orbit has 2c segments.
bool tritone_condition(const Seg& s, int c);

// True iff only T_0 fixes s as an ordered tuple.
bool stabilizer_is_trivial(const Seg& s, int c);
std::vector<TIElement> seg_stabilizer(const Seg& s, int c);

// The unique TI element with e(a) = b, scanning T_0..T_{c-1} then I_0..I_{c-1}.
// nullopt when none; throws std::runtime_error when two or more match.
std::optional<TIElement> ti_solve(const Seg& a, const Seg& b, int c);

// K_{i,j}: invert about the sum of entries i and j (1-based; i == j allowed).
Seg contextual_inversion_seg(const Seg& s, int i, int j, int c);

std::string format_seg(const Seg& s);
// Accepts "<0,4,7>" with optional spaces; throws std::invalid_argument.
Seg parse_seg(const std::string& text);

}  // namespace pcgrp
