#include "pcgrp/scales.hpp"

#include <set>
#include <stdexcept>

#include "pcgrp/chords.hpp"

namespace pcgrp {

long j_fn(int c, int d, long m, long k) {
  long num = (long)c * k + m;
  if (num >= 0) return num / d;
  return -(((-num) + d - 1) / d);
}

std::vector<long> j_seg(int c, int d, long m, const Seg& ks) {
  std::vector<long> r;
  for (int k : ks) r.push_back(j_fn(c, d, m, k));
  return r;
}

Seg j_seg_mod(int c, int d, long m, const Seg& ks) {
  Seg r;
  for (int k : ks) r.push_back(mod((int)(j_fn(c, d, m, k) % c), c));
  return r;
}

Seg phi_realize(int m) {
  Seg s;
  for (int k = 0; k < 4; ++k) s.push_back(mod((int)j_fn(7, 4, m, k), 7));
  return s;
}

std::vector<Seg> phi_tuples() {
  std::vector<Seg> r;
  for (int m = 0; m < 28; ++m) r.push_back(phi_realize(m));
  return r;
}

Seg phi_map(const Seg& t) {
  for (int m = 0; m < 28; ++m)
    if (phi_realize(m) == t) return phi_realize(m - 1);
  throw std::invalid_argument("phi_map: not a realized tuple: " + format_seg(t));
}

std::string seventh_name(const Seg& s) {
  if (s.size() != 4) return "";
  int d1 = mod(s[1] - s[0], 12), d2 = mod(s[2] - s[1], 12), d3 = mod(s[3] - s[2], 12);
  std::string suffix;
  if (d1 == 4 && d2 == 3 && d3 == 4) suffix = "M7";
  else if (d1 == 4 && d2 == 3 && d3 == 3) suffix = "7";
  else if (d1 == 3 && d2 == 4 && d3 == 3) suffix = "m7";
  else if (d1 == 3 && d2 == 3 && d3 == 4) suffix = "h7";
  else return "";
  return pc_name(mod(s[0], 12)) + suffix;
}

Seg fbar_flat(const Seg& s) {
  if (s.size() == 4) {
    int n = s[0];
    if (s == transpose_seg({0, 4, 7, 11}, n, 12)) return transpose_seg({0, 4, 7, 10}, n, 12);
    if (s == transpose_seg({0, 4, 7, 10}, n, 12)) return transpose_seg({0, 3, 7, 10}, n, 12);
    if (s == transpose_seg({0, 3, 7, 10}, n, 12)) return transpose_seg({0, 3, 6, 10}, n, 12);
    if (s == transpose_seg({0, 3, 6, 10}, n, 12))
      return transpose_seg({0, 4, 7, 11}, mod(n - 1, 12), 12);
  }
  throw std::invalid_argument("fbar_flat: not a root-position seventh: " + format_seg(s));
}

std::vector<FlatteningStep> flattening_cycle(
    const std::map<char, int>& start_accidentals) {
  const std::map<char, int> basepc = {{'C', 0}, {'D', 2}, {'E', 4}, {'F', 5},
                                      {'G', 7}, {'A', 9}, {'B', 11}};
  const std::string flats = "BEADGCF";
  std::map<char, int> acc;
  for (auto& [l, p] : basepc) acc[l] = 0;
  for (auto& [l, a] : start_accidentals) {
    if (!basepc.count(l))
      throw std::invalid_argument("flattening_cycle: unknown letter");
    acc[l] = a;
  }
  auto chord = [&]() {
    Seg s;
    for (char l : {'C', 'E', 'G', 'B'}) s.push_back(mod(basepc.at(l) + acc[l], 12));
    return s;
  };
  Seg start = chord();
  std::map<char, int> start_acc = acc;
  std::vector<FlatteningStep> steps;
  for (int k = 0;; ++k) {
    Seg before = chord();
    char l = flats[k % 7];
    acc[l] -= 1;
    Seg after = chord();
    FlatteningStep st;
    st.index = k + 1;
    st.letter = l;
    st.productive = after != before;
    st.pcseg = after;
    st.chord = seventh_name(after);
    steps.push_back(st);
    bool home = after == start && (k + 1) % 7 == 0;
    bool acc_back = true;
    for (auto& [ll, a] : acc)
      if (mod(a - start_acc[ll], 12) != 0) acc_back = false;
    if (home && acc_back) break;
    if (k > 2000)
      throw std::runtime_error("flattening_cycle: did not close");
  }
  return steps;
}

Star fifthfall_star(int which) {
  switch (which) {
    case 1: return build_star({{0, 2, 4, 6}, {0, 2, 3, 5}}, 7, false);
    case 2: return build_star({{0, 2, 4, 5}, {0, 1, 3, 5}}, 7, false);
    case 3: return build_star({{0, 2, 4, 6}, {0, 4, 6, 2}}, 7, false);
  }
  throw std::invalid_argument("fifthfall_star: which must be 1, 2, or 3");
}

std::vector<Seg> generated_scales_chain() {
  return {{5, 0, 7},
          {5, 0, 7, 2, 9},
          {5, 0, 7, 2, 9, 4, 11},
          {5, 0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10}};
}

Star generated_scales_star() { return build_star(generated_scales_chain(), 12, false); }

Star tetractys_rotation_star() {
  return build_star({{5, 0, 7}, {0, 7, 5}, {7, 5, 0}}, 12, false);
}

}  // namespace pcgrp
