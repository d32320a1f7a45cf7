#pragma once
// Chord symbols over Z_12: parsing, naming, the five-class catalog, and
// chord-list files.
#include <optional>

#include "pcgrp/orbit.hpp"

namespace pcgrp {

enum class ChordQuality { Maj, Min, Dom7, Maj7, Min7, HalfDim7, Dim7 };

struct ChordSymbol {
  int root = 0;
  ChordQuality quality = ChordQuality::Maj;
  // Inverted-contour member of the orbit (descending spelling). Only
  // meaningful for Maj7/Min7/Dim7, written with a trailing 'i'; minor triads
  // and half-diminished sevenths are inverted contours by definition.
  bool inverted_form = false;
};

// Orbit generators of the catalog classes, all over Z_12:
// triads <0,4,7>, dominant/half-diminished <0,4,7,10>, major sevenths
// <0,4,7,11>, minor sevenths <0,4,7,9> (option: <9,0,4,7>), diminished
// sevenths <1,4,7,10>.
Seg catalog_generator(ChordQuality q, bool alt_min7 = false);

// Dualistic segment of a chord symbol: ascending from the root for majors,
// dominants and the T-side sevenths, reversed for minors/half-diminished and
// the 'i' forms.
Seg chord_seg(const ChordSymbol& sym, bool alt_min7 = false);

// "C", "eb", "Am", "F#7", "BbM7", "Ah7", "Gm7b5", "C#o7", "Am7i", "A-7"...
std::optional<ChordSymbol> parse_chord(const std::string& text);

// Preferred spellings: C c C7 Ah7 CM7 Am7 C#o7, with a trailing 'i' on
// inverted-contour Maj7/Min7/Dim7; minor triads print fully lowercase.
std::string chord_symbol_name(const ChordSymbol& sym);

// Name a catalog segment back; nullopt when the segment is in no catalog
// orbit (or the modulus is not 12).
std::optional<std::string> chord_name(const Seg& s, int c, bool alt_min7 = false);

// Node text for graphs/reports: "D7 <2,6,9,0>", or just the segment when
// the chord has no catalog name.
std::string node_label(const Seg& s, int c);

std::string pc_name(int pc);           // C C# D Eb E F F# G Ab A Bb B
std::optional<int> parse_pc(const std::string& text);

// Whitespace/comma separated chord symbols or raw "<...>" segments;
// '#' starts a comment to end of line.
std::vector<Seg> load_chord_file(const std::string& path, int c, bool alt_min7 = false);
std::vector<Seg> parse_chord_list(const std::string& text, int c, bool alt_min7 = false);

}  // namespace pcgrp
