#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "pcgrp/progression.hpp"
#include "pcgrp/transforms.hpp"

using namespace pcgrp;

#ifndef PCGRP_CONFIG_DIR
#define PCGRP_CONFIG_DIR "configs"
#endif

static std::string config_path(const std::string& name) {
  return std::string(PCGRP_CONFIG_DIR) + "/" + name;
}

static Star jazz_star() { return build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true); }

static Extension label_group(const Star& s) {
  std::vector<NamedPerm> gens;
  for (const char* nm : {"K3,4", "Q7", "K1,4", "Q5"})
    gens.push_back({nm, eval_transform(nm, s)});
  return extend_equivariant(s, gens);
}

static Extension contextual_group(const Star& s) {
  std::vector<NamedPerm> gens;
  for (const char* nm : {"P", "L", "R"}) gens.push_back({nm, eval_transform(nm, s)});
  return extend_equivariant(s, gens);
}

static Extension ti_group(const Star& s) {
  return extend_equivariant(
      s, {{"T1", ti_perm(s.u, {'T', 1})}, {"I0", ti_perm(s.u, {'I', 0})}});
}

TEST_CASE("half-diminished chain alternates two involutions") {
  Star s = jazz_star();
  Extension e = label_group(s);
  CHECK(e.full.order() == 48);
  std::vector<Seg> chords =
      load_chord_file(config_path("chords_round_midnight.txt"), 12);
  REQUIRE(chords.size() == 6);
  CHECK(chords[0] == Seg{7, 3, 0, 9});
  CHECK(chords[5] == Seg{10, 2, 5, 8});

  Network net = analyze(chords, e);
  REQUIRE(net.edges.size() == 5);
  const char* expect[] = {"K3,4", "Q7*K1,4", "K3,4", "Q7*K1,4", "K3,4"};
  for (int i = 0; i < 5; ++i) {
    CHECK(net.edges[i].word == expect[i]);
    CHECK(net.edges[i].label == expect[i]);
    CHECK(net.edges[i].shift == 0);
  }
  CHECK(net.nodes[0].chord == "Ah7");
  CHECK(net.nodes[1].chord == "D7");
  CHECK(net.nodes[0].block == 1);

  auto runs = detect_flip_flop(net);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].first_edge == 0);
  CHECK(runs[0].length == 5);
  CHECK(runs[0].a == "K3,4");
  CHECK(runs[0].b == "Q7*K1,4");

  auto j = network_json(net);
  CHECK(j["nodes"].size() == 6);
  CHECK(j["edges"].size() == 5);
  CHECK(j["edges"][0]["label"] == "K3,4");
  CHECK(j["edges"][1]["word"] == "Q7*K1,4");
  CHECK(j["edges"][0]["shift"] == 0);
  CHECK(j["nodes"][0]["chord"] == "Ah7");

  std::string dot = emit_dot(net);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("n0 [label=\"Ah7 <7,3,0,9>\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [label=\"K3,4\"]") != std::string::npos);
}

TEST_CASE("chain crossing into the triad block ends its flip-flop") {
  Star s = jazz_star();
  Extension e = label_group(s);
  std::vector<Seg> chords = load_chord_file(config_path("chords_virginia.txt"), 12);
  REQUIRE(chords.size() == 7);
  Network net = analyze(chords, e);
  REQUIRE(net.edges.size() == 6);
  const char* expect[] = {"K3,4", "Q7*K1,4", "K3,4", "Q7*K1,4", "K3,4", "Q5*fbar"};
  for (int i = 0; i < 6; ++i) CHECK(net.edges[i].word == expect[i]);
  CHECK(net.edges[5].shift == 1);
  for (int i = 0; i < 5; ++i)
    CHECK(perm_order(net.edge_perms[i]) == 2);
  CHECK(perm_order(net.edge_perms[5]) != 2);
  auto runs = detect_flip_flop(net);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].first_edge == 0);
  CHECK(runs[0].length == 5);

  // The same chain five semitones down solves to the same elements.
  std::vector<Seg> down = load_chord_file(config_path("chords_stella.txt"), 12);
  REQUIRE(down.size() == 7);
  for (int i = 0; i < 7; ++i)
    CHECK(down[i] == transpose_seg(chords[i], 5, 12));
  Network net2 = analyze(down, e);
  for (int i = 0; i < 6; ++i) {
    CHECK(net2.edges[i].word == net.edges[i].word);
    CHECK(net2.edge_perms[i] == net.edge_perms[i]);
  }
}

TEST_CASE("analyze rejects unsolvable or trivial chains") {
  Star s = jazz_star();
  Extension e = label_group(s);
  CHECK_THROWS_AS((void)analyze({{0, 4, 7}}, e), std::invalid_argument);
  CHECK_THROWS_AS((void)analyze({{0, 4, 7}, {0, 1, 2}}, e), std::invalid_argument);
  Extension tOnly = plain_group(s, {{"T1", ti_perm(s.u, {'T', 1})}});
  CHECK_THROWS_AS((void)analyze({{4, 0, 9}, {5, 9, 0, 3}}, tOnly), std::runtime_error);
}

TEST_CASE("grid of four rows closes under commuting squares") {
  Star s = jazz_star();
  Extension rowG = contextual_group(s);
  Extension colG = ti_group(s);
  std::vector<std::vector<Seg>> rows = {
      {{4, 0, 9}, {5, 9, 0, 3}, {2, 6, 9, 0}, {1, 9, 6}},
      {{1, 9, 6}, {2, 6, 9, 0}, {11, 3, 6, 9}, {10, 6, 3}},
      {{10, 6, 3}, {11, 3, 6, 9}, {8, 0, 3, 6}, {7, 3, 0}},
      {{7, 3, 0}, {8, 0, 3, 6}, {5, 9, 0, 3}, {4, 0, 9}}};
  GridReport gr = verify_grid_network(rows, rowG, colG);
  CHECK(gr.report.all_pass());
  REQUIRE(gr.network.edges.size() == 24);
  REQUIRE(gr.network.nodes.size() == 16);
  CHECK(gr.network.grid_rows == 4);
  CHECK(gr.network.grid_cols == 4);

  CHECK(gr.network.edges[0].word == "L*fbar");
  CHECK(gr.network.edges[1].word == "P*R");
  CHECK(gr.network.edges[2].word == "L*fbar");
  for (int r = 1; r < 4; ++r)
    for (int k = 0; k < 3; ++k)
      CHECK(gr.network.edge_perms[3 * r + k] == gr.network.edge_perms[k]);
  CHECK(gr.network.edge_perms[1] == eval_transform("Q9", s));
  CHECK(gr.column_labels == std::vector<std::string>{"T9", "T9", "T9", "T9"});

  std::string dot = emit_dot(gr.network);
  CHECK(dot.find("rankdir=TB") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 40);
  size_t ranks = 0;
  for (size_t p = dot.find("rank=same"); p != std::string::npos;
       p = dot.find("rank=same", p + 1))
    ++ranks;
  CHECK(ranks == 4);

  // Walking the whole cycle returns to the opening minor triad.
  std::vector<Seg> chain =
      load_chord_file(config_path("chords_omnibus_chain.txt"), 12);
  REQUIRE(chain.size() == 13);
  CHECK(chain.front() == chain.back());
  Network net = analyze(chain, rowG);
  Perm acc = identity_perm(s.u.N);
  for (const auto& p : net.edge_perms) acc = compose(p, acc);
  CHECK(acc == identity_perm(s.u.N));
  // Adjacent involutions in this cycle are equal, never two alternating ones.
  CHECK(detect_flip_flop(net).empty());
}

TEST_CASE("major-form grid uses the opposite middle schritt") {
  Star s = jazz_star();
  Extension rowG = contextual_group(s);
  Extension colG = ti_group(s);
  std::vector<std::vector<Seg>> rows = {
      {{9, 1, 4}, {8, 4, 1, 10}, {5, 1, 10, 7}, {6, 10, 1}},
      {{6, 10, 1}, {5, 1, 10, 7}, {2, 10, 7, 4}, {3, 7, 10}},
      {{3, 7, 10}, {2, 10, 7, 4}, {11, 7, 4, 1}, {0, 4, 7}},
      {{0, 4, 7}, {11, 7, 4, 1}, {8, 4, 1, 10}, {9, 1, 4}}};
  GridReport gr = verify_grid_network(rows, rowG, colG);
  CHECK(gr.report.all_pass());
  for (int r = 1; r < 4; ++r)
    for (int k = 0; k < 3; ++k)
      CHECK(gr.network.edge_perms[3 * r + k] == gr.network.edge_perms[k]);
  CHECK(gr.network.edge_perms[1] == eval_transform("Q3", s));
  CHECK(gr.network.edge_perms[1] != eval_transform("Q9", s));
  CHECK(gr.column_labels == std::vector<std::string>{"T9", "T9", "T9", "T9"});

  std::vector<Seg> chain =
      load_chord_file(config_path("chords_omnibus_inverted_chain.txt"), 12);
  REQUIRE(chain.size() == 13);
  Network net = analyze(chain, rowG);
  Perm acc = identity_perm(s.u.N);
  for (const auto& p : net.edge_perms) acc = compose(p, acc);
  CHECK(acc == identity_perm(s.u.N));
}

TEST_CASE("grid fixture files match the inline rows") {
  std::vector<Seg> flat = load_chord_file(config_path("chords_omnibus.txt"), 12);
  REQUIRE(flat.size() == 16);
  CHECK(flat[0] == Seg{4, 0, 9});
  CHECK(flat[4] == Seg{1, 9, 6});
  CHECK(flat[15] == Seg{4, 0, 9});
  std::vector<Seg> inv = load_chord_file(config_path("chords_omnibus_inverted.txt"), 12);
  REQUIRE(inv.size() == 16);
  CHECK(inv[0] == Seg{9, 1, 4});
  CHECK(inv[15] == Seg{9, 1, 4});
}

TEST_CASE("three-class ground bass resolves around the meta-rotation") {
  Star s3 = build_star({{0, 4, 7}, {0, 4, 7, 9}, {0, 4, 7, 10}}, 12, true);
  Extension e = contextual_group(s3);
  CHECK(e.full.order() == 72);
  std::vector<Seg> chain = load_chord_file(config_path("chords_passacaglia.txt"), 12);
  REQUIRE(chain.size() == 8);
  Network net = analyze(chain, e);
  REQUIRE(net.edges.size() == 7);

  CHECK(net.edge_perms[0] == meta_rotation(s3));
  CHECK(net.edges[0].label == "fbar");
  CHECK(net.edges[0].shift == 1);
  auto k34fn = [](const Seg& sg) { return contextual_inversion_seg(sg, 3, 4, 12); };
  Perm k34 = lift_via_reference(s3, 2, k34fn);
  CHECK(net.edge_perms[2] == k34);
  CHECK(net.edge_perms[6] == k34);

  const int invol[] = {0, 0, 1, 0, 0, 0, 1};
  for (int i = 0; i < 7; ++i)
    CHECK((perm_order(net.edge_perms[i]) == 2) == (invol[i] == 1));
  CHECK(detect_flip_flop(net).empty());

  Perm t7 = ti_perm(s3.u, {'T', 7});
  for (int i = 0; i < 4; ++i)
    CHECK(t7[s3.u.find(chain[i])] == s3.u.find(chain[i + 4]));
}

TEST_CASE("labels fall back to subgroup words and meta-rotation powers") {
  Star s = jazz_star();
  Extension e = ti_group(s);
  CHECK(canonical_label(e, ti_perm(s.u, {'T', 9})) == "T9");
  CHECK(canonical_label(e, identity_perm(s.u.N)) == "T0");
  CHECK(canonical_label(e, meta_rotation(s)) == "fbar");
  CHECK(canonical_label(e, compose(ti_perm(s.u, {'I', 9}), meta_rotation(s))) ==
        "I9*fbar");

  Extension h = contextual_group(s);
  CHECK(canonical_label(h, eval_transform("L*fbar", s)) == "L*fbar");
  CHECK_THROWS_AS((void)canonical_label(h, ti_perm(s.u, {'T', 1})),
                  std::invalid_argument);
}
