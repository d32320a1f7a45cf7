#include "pcgrp/star.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace pcgrp {

template <typename F>
static Perm blockwise(const Universe& u, F f) {  // f(bi, p) -> flat index
  Perm r(u.N);
  for (size_t bi = 0; bi < u.blocks.size(); ++bi)
    for (size_t p = 0; p < u.blocks[bi].elems.size(); ++p)
      r[u.flat((int)bi, (int)p)] = f((int)bi, (int)p);
  return r;
}

Star build_star(const std::vector<Seg>& gens, int c, bool with_inversions) {
  if (gens.empty()) throw std::invalid_argument("star needs a center generator");
  Star s;
  for (auto& g : gens) s.u.blocks.push_back(build_orbit(g, c, with_inversions));
  s.u.finish();
  for (size_t a = 0; a < s.u.blocks.size(); ++a)
    for (size_t b = a + 1; b < s.u.blocks.size(); ++b)
      for (auto& e : s.u.blocks[a].elems)
        if (s.u.blocks[b].find(e) >= 0)
          throw std::invalid_argument("star blocks are not disjoint: " + format_seg(e));
  const Block& b0 = s.u.blocks[0];
  for (size_t j = 0; j < gens.size(); ++j) {
    const Block& bj = s.u.blocks[j];
    if (bj.elems.size() != b0.elems.size())
      throw std::invalid_argument("arm orbit size differs from center orbit size");
    std::vector<int> a(b0.elems.size()), ai(b0.elems.size());
    for (size_t p = 0; p < b0.elems.size(); ++p) {
      TIElement via{b0.kind[p], b0.idx[p]};
      int q = bj.find(via.apply(gens[j], c));
      if (q < 0) throw std::invalid_argument("arm assignment is not equivariant");
      a[p] = q;
      ai[q] = (int)p;
    }
    s.arm.push_back(a);
    s.armInv.push_back(ai);
  }
  return s;
}

static int in_block_or_throw(const Block& b, const Seg& s) {
  int q = b.find(s);
  if (q < 0) throw std::invalid_argument("transform image leaves its orbit: " + format_seg(s));
  return q;
}

Perm ti_perm(const Universe& u, TIElement e) {
  return blockwise(u, [&](int bi, int p) {
    const Block& b = u.blocks[bi];
    return u.flat(bi, in_block_or_throw(b, e.apply(b.elems[p], b.c)));
  });
}

Perm schritt_perm(const Universe& u, int i) {
  return blockwise(u, [&](int bi, int p) {
    const Block& b = u.blocks[bi];
    int sh = b.kind[p] == 'T' ? i : -i;
    return u.flat(bi, in_block_or_throw(b, transpose_seg(b.elems[p], sh, b.c)));
  });
}

Perm kij_perm(const Universe& u, int i, int j) {
  return blockwise(u, [&](int bi, int p) {
    const Block& b = u.blocks[bi];
    return u.flat(bi, in_block_or_throw(b, contextual_inversion_seg(b.elems[p], i, j, b.c)));
  });
}

Perm meta_rotation(const Star& s) {
  int n = s.block_count();
  return blockwise(s.u, [&](int bi, int p) {
    int q = s.armInv[bi][p];
    int bj = (bi + 1) % n;
    return s.u.flat(bj, s.arm[bj][q]);
  });
}

Perm lift_center(const Star& s, const Perm& h0) {
  return blockwise(s.u, [&](int bi, int p) {
    int q = s.armInv[bi][p];
    return s.u.flat(bi, s.arm[bi][h0[q]]);
  });
}

Perm lift_via_reference(const Star& s, int ref, const std::function<Seg(const Seg&)>& f) {
  const Block& br = s.u.blocks[ref];
  Perm h0(br.elems.size());
  for (size_t p = 0; p < br.elems.size(); ++p) {
    Seg img = f(br.elems[s.arm[ref][p]]);
    int q = br.find(img);
    if (q < 0)
      throw std::invalid_argument("reference-block image leaves its orbit: " + format_seg(img));
    h0[p] = s.armInv[ref][q];
  }
  return lift_center(s, h0);
}

int block_shift(const Universe& u, const Perm& p) {
  int n = (int)u.blocks.size();
  int shift = -2;
  for (int f = 0; f < u.N; ++f) {
    auto [bi, _] = u.loc(f);
    auto [bj, _2] = u.loc(p[f]);
    int d = ((bj - bi) % n + n) % n;
    if (shift == -2)
      shift = d;
    else if (shift != d)
      return -1;
  }
  return shift;
}

StarConfig load_star_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open star config: " + path);
  nlohmann::json j;
  in >> j;
  StarConfig cfg;
  cfg.modulus = j.value("modulus", 12);
  cfg.center = parse_seg(j.at("center").get<std::string>());
  if (j.count("arms"))
    for (auto& a : j.at("arms")) cfg.arms.push_back(parse_seg(a.get<std::string>()));
  if (!j.count("group") || j.at("group").is_string()) {
    cfg.group_kind = j.value("group", std::string("TI"));
    if (cfg.group_kind != "TI" && cfg.group_kind != "T")
      throw std::invalid_argument("star group must be \"TI\", \"T\", or a generator list");
  } else {
    cfg.group_kind = "custom";
    for (auto& g : j.at("group")) cfg.custom_gens.push_back(g.get<std::string>());
  }
  return cfg;
}

Star build_star(const StarConfig& cfg) {
  std::vector<Seg> gens = {cfg.center};
  gens.insert(gens.end(), cfg.arms.begin(), cfg.arms.end());
  return build_star(gens, cfg.modulus, cfg.group_kind != "T");
}

}  // namespace pcgrp
