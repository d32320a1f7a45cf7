#include "pcgrp/chords.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcgrp {

static const std::array<const char*, 12> kPcNames = {"C",  "C#", "D",  "Eb", "E",  "F",
                                                     "F#", "G",  "Ab", "A",  "Bb", "B"};

std::string pc_name(int pc) { return kPcNames[mod(pc, 12)]; }

std::optional<int> parse_pc(const std::string& text) {
  if (text.empty()) return std::nullopt;
  int base;
  switch (text[0]) {
    case 'C': base = 0; break;
    case 'D': base = 2; break;
    case 'E': base = 4; break;
    case 'F': base = 5; break;
    case 'G': base = 7; break;
    case 'A': base = 9; break;
    case 'B': base = 11; break;
    default: return std::nullopt;
  }
  if (text.size() == 1) return base;
  if (text.size() == 2 && text[1] == '#') return mod(base + 1, 12);
  if (text.size() == 2 && text[1] == 'b') return mod(base - 1, 12);
  return std::nullopt;
}

Seg catalog_generator(ChordQuality q, bool alt_min7) {
  switch (q) {
    case ChordQuality::Maj:
    case ChordQuality::Min: return {0, 4, 7};
    case ChordQuality::Dom7:
    case ChordQuality::HalfDim7: return {0, 4, 7, 10};
    case ChordQuality::Maj7: return {0, 4, 7, 11};
    case ChordQuality::Min7: return alt_min7 ? Seg{9, 0, 4, 7} : Seg{0, 4, 7, 9};
    case ChordQuality::Dim7: return {1, 4, 7, 10};
  }
  throw std::logic_error("unreachable");
}

// Form index of the orbit element for a chord root, per quality.
// T-forms: root = idx + tAdd; inverted forms: root = idx + iAdd.
struct RootOffsets {
  int tAdd, iAdd;
};
static RootOffsets offsets(ChordQuality q) {
  switch (q) {
    case ChordQuality::Maj:
    case ChordQuality::Min: return {0, -7};
    case ChordQuality::Dom7:
    case ChordQuality::HalfDim7: return {0, -10};
    case ChordQuality::Maj7: return {0, -11};
    case ChordQuality::Min7: return {9, -7};
    case ChordQuality::Dim7: return {1, -10};
  }
  throw std::logic_error("unreachable");
}

static bool uses_inverted_contour(const ChordSymbol& s) {
  return s.quality == ChordQuality::Min || s.quality == ChordQuality::HalfDim7 ||
         s.inverted_form;
}

Seg chord_seg(const ChordSymbol& sym, bool alt_min7) {
  Seg gen = catalog_generator(sym.quality, alt_min7);
  RootOffsets off = offsets(sym.quality);
  TIElement via = uses_inverted_contour(sym) ? TIElement{'I', mod(sym.root - off.iAdd, 12)}
                                             : TIElement{'T', mod(sym.root - off.tAdd, 12)};
  return via.apply(gen, 12);
}

std::optional<ChordSymbol> parse_chord(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text[0] >= 'a' && text[0] <= 'g') {
    // Fully lowercase minor triad: "a", "eb", "f#".
    std::string up = text;
    up[0] = (char)toupper((unsigned char)up[0]);
    auto pc = parse_pc(up);
    if (!pc) return std::nullopt;
    return ChordSymbol{*pc, ChordQuality::Min, false};
  }
  size_t rootLen = 1;
  if (text.size() > 1 && (text[1] == '#' || text[1] == 'b')) rootLen = 2;
  auto pc = parse_pc(text.substr(0, rootLen));
  if (!pc) return std::nullopt;
  std::string suffix = text.substr(rootLen);
  bool inverted = false;
  if (suffix.size() > 1 && suffix.back() == 'i') {
    inverted = true;
    suffix.pop_back();
  }
  ChordQuality q;
  if (suffix.empty())
    q = ChordQuality::Maj;
  else if (suffix == "m")
    q = ChordQuality::Min;
  else if (suffix == "7")
    q = ChordQuality::Dom7;
  else if (suffix == "M7" || suffix == "maj7")
    q = ChordQuality::Maj7;
  else if (suffix == "m7" || suffix == "-7")
    q = ChordQuality::Min7;
  else if (suffix == "h7" || suffix == "m7b5")
    q = ChordQuality::HalfDim7;
  else if (suffix == "o7" || suffix == "dim7")
    q = ChordQuality::Dim7;
  else
    return std::nullopt;
  if (inverted &&
      !(q == ChordQuality::Maj7 || q == ChordQuality::Min7 || q == ChordQuality::Dim7))
    return std::nullopt;
  return ChordSymbol{*pc, q, inverted};
}

std::string chord_symbol_name(const ChordSymbol& sym) {
  std::string root = pc_name(sym.root);
  switch (sym.quality) {
    case ChordQuality::Maj: return root;
    case ChordQuality::Min: {
      for (auto& ch : root) ch = (char)tolower((unsigned char)ch);
      return root;
    }
    case ChordQuality::Dom7: return root + "7";
    case ChordQuality::HalfDim7: return root + "h7";
    case ChordQuality::Maj7: return root + (sym.inverted_form ? "M7i" : "M7");
    case ChordQuality::Min7: return root + (sym.inverted_form ? "m7i" : "m7");
    case ChordQuality::Dim7: return root + (sym.inverted_form ? "o7i" : "o7");
  }
  throw std::logic_error("unreachable");
}

std::optional<std::string> chord_name(const Seg& s, int c, bool alt_min7) {
  if (c != 12) return std::nullopt;
  static const ChordQuality kTQualities[] = {ChordQuality::Maj, ChordQuality::Dom7,
                                             ChordQuality::Maj7, ChordQuality::Min7,
                                             ChordQuality::Dim7};
  for (ChordQuality q : kTQualities) {
    Block b = build_orbit(catalog_generator(q, alt_min7), 12, true);
    int p = b.find(s);
    if (p < 0) continue;
    RootOffsets off = offsets(q);
    ChordSymbol sym;
    if (b.kind[p] == 'T') {
      sym = {mod(b.idx[p] + off.tAdd, 12), q, false};
    } else {
      int root = mod(b.idx[p] + off.iAdd, 12);
      switch (q) {
        case ChordQuality::Maj: sym = {root, ChordQuality::Min, false}; break;
        case ChordQuality::Dom7: sym = {root, ChordQuality::HalfDim7, false}; break;
        default: sym = {root, q, true}; break;
      }
    }
    return chord_symbol_name(sym);
  }
  return std::nullopt;
}

std::string node_label(const Seg& s, int c) {
  auto nm = chord_name(s, c);
  std::string segText = format_seg(s);
  return nm ? *nm + " " + segText : segText;
}

std::vector<Seg> parse_chord_list(const std::string& text, int c, bool alt_min7) {
  std::vector<Seg> out;
  size_t i = 0;
  auto flush = [&](const std::string& tok) {
    if (tok.empty()) return;
    if (tok[0] == '<') {
      Seg s = parse_seg(tok);
      for (auto& v : s) v = mod(v, c);
      out.push_back(s);
      return;
    }
    auto sym = parse_chord(tok);
    if (!sym) throw std::invalid_argument("unrecognized chord symbol: " + tok);
    if (c != 12) throw std::invalid_argument("chord symbols need modulus 12: " + tok);
    out.push_back(chord_seg(*sym, alt_min7));
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#' && (i == 0 || isspace((unsigned char)text[i - 1]) || text[i - 1] == ',')) {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (isspace((unsigned char)ch) || ch == ',') {
      ++i;
    } else if (ch == '<') {
      size_t end = text.find('>', i);
      if (end == std::string::npos) throw std::invalid_argument("unterminated pc-seg");
      flush(text.substr(i, end - i + 1));
      i = end + 1;
    } else {
      size_t end = i;
      while (end < text.size() && !isspace((unsigned char)text[end]) && text[end] != ',')
        ++end;
      flush(text.substr(i, end - i));
      i = end;
    }
  }
  return out;
}

std::vector<Seg> load_chord_file(const std::string& path, int c, bool alt_min7) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open chord file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_chord_list(ss.str(), c, alt_min7);
}

}  // namespace pcgrp
