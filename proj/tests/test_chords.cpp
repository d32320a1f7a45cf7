#include <stdexcept>

#include "doctest.h"
#include "pcgrp/chords.hpp"

using namespace pcgrp;

TEST_CASE("chord symbols parse") {
  auto f7 = parse_chord("F7");
  REQUIRE(f7.has_value());
  CHECK(f7->root == 5);
  CHECK(f7->quality == ChordQuality::Dom7);

  auto am = parse_chord("a");
  REQUIRE(am.has_value());
  CHECK(am->root == 9);
  CHECK(am->quality == ChordQuality::Min);

  auto eb = parse_chord("eb");
  REQUIRE(eb.has_value());
  CHECK(eb->root == 3);

  auto h = parse_chord("Ah7");
  REQUIRE(h.has_value());
  CHECK(h->root == 9);
  CHECK(h->quality == ChordQuality::HalfDim7);
  CHECK(parse_chord("Am7b5")->quality == ChordQuality::HalfDim7);

  CHECK(parse_chord("BbM7")->quality == ChordQuality::Maj7);
  CHECK(parse_chord("Bbmaj7")->quality == ChordQuality::Maj7);
  CHECK(parse_chord("A-7")->quality == ChordQuality::Min7);
  CHECK(parse_chord("C#o7")->quality == ChordQuality::Dim7);
  CHECK(parse_chord("C#dim7")->quality == ChordQuality::Dim7);

  auto inv = parse_chord("Am7i");
  REQUIRE(inv.has_value());
  CHECK(inv->inverted_form);

  CHECK_FALSE(parse_chord("H7").has_value());
  CHECK_FALSE(parse_chord("Cx").has_value());
  CHECK_FALSE(parse_chord("").has_value());
  CHECK_FALSE(parse_chord("C77").has_value());
}

TEST_CASE("dualistic chord segments") {
  CHECK(chord_seg(*parse_chord("C")) == Seg{0, 4, 7});
  CHECK(chord_seg(*parse_chord("a")) == Seg{4, 0, 9});
  CHECK(chord_seg(*parse_chord("c")) == Seg{7, 3, 0});
  CHECK(chord_seg(*parse_chord("F7")) == Seg{5, 9, 0, 3});
  CHECK(chord_seg(*parse_chord("Ah7")) == Seg{7, 3, 0, 9});
  CHECK(chord_seg(*parse_chord("Bbh7")) == Seg{8, 4, 1, 10});
  CHECK(chord_seg(*parse_chord("CM7")) == Seg{0, 4, 7, 11});
  CHECK(chord_seg(*parse_chord("Am7")) == Seg{0, 4, 7, 9});
  CHECK(chord_seg(*parse_chord("Dm7")) == Seg{5, 9, 0, 2});
  CHECK(chord_seg(*parse_chord("C#o7")) == Seg{1, 4, 7, 10});
  CHECK(chord_seg(*parse_chord("Am7i")) == Seg{4, 0, 9, 7});
}

TEST_CASE("alternate minor-seventh encoding") {
  CHECK(catalog_generator(ChordQuality::Min7, true) == Seg{9, 0, 4, 7});
  CHECK(chord_seg(*parse_chord("Am7"), true) == Seg{9, 0, 4, 7});
}

TEST_CASE("naming round-trips the whole catalog") {
  for (ChordQuality q : {ChordQuality::Maj, ChordQuality::Dom7, ChordQuality::Maj7,
                         ChordQuality::Min7, ChordQuality::Dim7}) {
    Block b = build_orbit(catalog_generator(q), 12, true);
    for (auto& s : b.elems) {
      auto nm = chord_name(s, 12);
      REQUIRE(nm.has_value());
      auto sym = parse_chord(*nm);
      REQUIRE(sym.has_value());
      CHECK(chord_seg(*sym) == s);
      CHECK(chord_symbol_name(*sym) == *nm);
    }
  }
}

TEST_CASE("names of familiar segments") {
  CHECK(*chord_name({2, 6, 9, 0}, 12) == "D7");
  CHECK(*chord_name({4, 0, 9}, 12) == "a");
  CHECK(*chord_name({7, 3, 0, 9}, 12) == "Ah7");
  CHECK(*chord_name({10, 6, 3}, 12) == "eb");
  CHECK_FALSE(chord_name({0, 1, 2}, 12).has_value());
  CHECK_FALSE(chord_name({0, 2, 4}, 7).has_value());
  CHECK(node_label({2, 6, 9, 0}, 12) == "D7 <2,6,9,0>");
  CHECK(node_label({0, 1, 2}, 12) == "<0,1,2>");
}

TEST_CASE("pitch-class names") {
  const char* expect[] = {"C",  "C#", "D", "Eb", "E",  "F",
                          "F#", "G",  "Ab", "A",  "Bb", "B"};
  for (int pc = 0; pc < 12; ++pc) {
    CHECK(pc_name(pc) == expect[pc]);
    auto back = parse_pc(expect[pc]);
    REQUIRE(back.has_value());
    CHECK(*back == pc);
  }
  CHECK(*parse_pc("Db") == 1);
  CHECK(*parse_pc("G#") == 8);
  CHECK_FALSE(parse_pc("X").has_value());
}

TEST_CASE("chord lists with comments and raw segments") {
  auto segs = parse_chord_list("a, F7 # tail comment\n<0,6> Bh7", 12);
  REQUIRE(segs.size() == 4);
  CHECK(segs[0] == Seg{4, 0, 9});
  CHECK(segs[1] == Seg{5, 9, 0, 3});
  CHECK(segs[2] == Seg{0, 6});
  CHECK(segs[3] == Seg{9, 5, 2, 11});
  CHECK(parse_chord_list("# only a comment", 12).empty());
  CHECK(parse_chord_list("<0,2,4> <13,2>", 7) ==
        std::vector<Seg>{{0, 2, 4}, {6, 2}});
  CHECK_THROWS_AS((void)parse_chord_list("F7", 7), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_chord_list("notachord", 12), std::invalid_argument);
}
