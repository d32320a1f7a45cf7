#pragma once
// Transform expressions: "T3", "I7", "Q-4", "K1,4", "P", "L", "R", "fbar",
// powers by '^', composition by '*' read right-to-left (rightmost acts
// first). Evaluated against a star scope, or directly against one segment.
#include "pcgrp/star.hpp"

namespace pcgrp {

struct TransformFactor {
  std::string base;  // "T", "I", "Q", "K", "P", "L", "R", "fbar"
  int a = 0, b = 0;  // T/I/Q index in a; K indices in a,b
  int power = 1;
};

std::vector<TransformFactor> parse_transform(const std::string& expr);

// Permutation of the star universe. K/P/L/R apply blockwise when every block
// is long enough (identical to the arm-conjugation lift there); otherwise
// they lift via the first block that fits the indices. T/I/Q are always
// blockwise; "fbar" is the meta-rotation.
Perm eval_transform(const std::string& expr, const Star& scope);

// Single-factor evaluation, exposed for generator naming.
Perm eval_factor(const TransformFactor& f, const Star& scope);

// Segment-level application: the scope is the TI-orbit of the segment
// itself, so Schritte read the segment as the orbit generator. "fbar" is
// rejected here.
Seg apply_to_seg(const std::string& expr, const Seg& s, int c);

}  // namespace pcgrp
