#pragma once
// Chord chains to transformation networks: unique-transform solving,
// canonical edge labels, grid verification, flip-flop detection, DOT/JSON.
#include "pcgrp/chords.hpp"
#include "pcgrp/extension.hpp"

namespace pcgrp {

struct NetNode {
  int id = 0;
  Seg seg;
  std::string chord;  // "" when the segment has no catalog name
  int block = 0;
};

struct NetEdge {
  int from = 0, to = 0;
  std::string label;  // canonical g * fbar^i rendering
  std::string word;   // breadth-first word over the group's generators
  int shift = 0;
};

struct Network {
  int c = 12;
  std::vector<NetNode> nodes;
  std::vector<NetEdge> edges;
  std::vector<Perm> edge_perms;
  int grid_rows = 0, grid_cols = 0;  // 0 when the network is a chain
};

// Canonical rendering of a group element: TI names when the element acts as
// a single T_n or I_n, otherwise its word over the non-meta-rotation
// generators, with the meta-rotation power appended.
std::string canonical_label(const Extension& e, const Perm& p);

// Chain network over consecutive chords; every step must have a unique
// solving element in e.full.
Network analyze(const std::vector<Seg>& chords, const Extension& e);

struct FlipFlopRun {
  int first_edge = 0;
  int length = 0;       // number of edges in the run
  std::string a, b;     // the two alternating involution labels
};

// Maximal runs of at least two edges alternating strictly between exactly
// two distinct involutions.
std::vector<FlipFlopRun> detect_flip_flop(const Network& n);

struct GridReport {
  CheckReport report;
  Network network;                        // row edges first, then column edges
  std::vector<std::string> column_labels;  // canonical label per column when
                                           // uniform across rows, else ""
};

// Horizontal edges solved in rowG, vertical edges in colG; every interior
// square is checked to commute as permutations.
GridReport verify_grid_network(const std::vector<std::vector<Seg>>& rows,
                               const Extension& rowG, const Extension& colG);

std::string emit_dot(const Network& n);
nlohmann::ordered_json network_json(const Network& n);

}  // namespace pcgrp
