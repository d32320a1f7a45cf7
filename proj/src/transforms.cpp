#include "pcgrp/transforms.hpp"

#include <stdexcept>

namespace pcgrp {

static int parse_int(const std::string& s, size_t& i) {
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
  if (i == start || (i == start + 1 && !isdigit((unsigned char)s[start])))
    throw std::invalid_argument("expected integer in transform: " + s);
  return std::stoi(s.substr(start, i - start));
}

static TransformFactor parse_factor(const std::string& tok) {
  TransformFactor f;
  size_t i = 0;
  if (tok.rfind("fbar", 0) == 0) {
    f.base = "fbar";
    i = 4;
  } else if (tok[0] == 'T' || tok[0] == 'I' || tok[0] == 'Q') {
    f.base = std::string(1, tok[0]);
    i = 1;
    f.a = parse_int(tok, i);
  } else if (tok[0] == 'K') {
    f.base = "K";
    i = 1;
    f.a = parse_int(tok, i);
    if (i >= tok.size() || tok[i] != ',')
      throw std::invalid_argument("K needs two indices: " + tok);
    ++i;
    f.b = parse_int(tok, i);
  } else if (tok[0] == 'P' || tok[0] == 'L' || tok[0] == 'R') {
    f.base = std::string(1, tok[0]);
    i = 1;
  } else {
    throw std::invalid_argument("unrecognized transform: " + tok);
  }
  if (i < tok.size()) {
    if (tok[i] != '^') throw std::invalid_argument("unrecognized transform: " + tok);
    ++i;
    f.power = parse_int(tok, i);
    if (i != tok.size()) throw std::invalid_argument("unrecognized transform: " + tok);
  }
  return f;
}

std::vector<TransformFactor> parse_transform(const std::string& expr) {
  std::vector<TransformFactor> out;
  std::string tok;
  auto flush = [&]() {
    if (!tok.empty()) {
      out.push_back(parse_factor(tok));
      tok.clear();
    }
  };
  for (char ch : expr) {
    if (ch == '*')
      flush();
    else if (!isspace((unsigned char)ch))
      tok.push_back(ch);
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty transform expression");
  return out;
}

static Perm eval_kij(const Star& scope, int i, int j) {
  int need = std::max(i, j);
  if (i < 1 || j < 1) throw std::invalid_argument("contextual inversion indices start at 1");
  bool everywhere = true;
  for (auto& b : scope.u.blocks)
    if ((int)b.elems[0].size() < need) everywhere = false;
  if (everywhere) return kij_perm(scope.u, i, j);
  int c = scope.u.c();
  for (int bi = 0; bi < scope.block_count(); ++bi)
    if ((int)scope.u.blocks[bi].elems[0].size() >= need)
      return lift_via_reference(scope, bi,
                                [&](const Seg& s) { return contextual_inversion_seg(s, i, j, c); });
  throw std::invalid_argument("no block is long enough for K" + std::to_string(i) + "," +
                              std::to_string(j));
}

Perm eval_factor(const TransformFactor& f, const Star& scope) {
  int c = scope.u.c();
  Perm p;
  if (f.base == "T")
    p = ti_perm(scope.u, {'T', mod(f.a, c)});
  else if (f.base == "I")
    p = ti_perm(scope.u, {'I', mod(f.a, c)});
  else if (f.base == "Q")
    p = schritt_perm(scope.u, mod(f.a, c));
  else if (f.base == "K")
    p = eval_kij(scope, f.a, f.b);
  else if (f.base == "P")
    p = eval_kij(scope, 1, 3);
  else if (f.base == "L")
    p = eval_kij(scope, 2, 3);
  else if (f.base == "R")
    p = eval_kij(scope, 1, 2);
  else if (f.base == "fbar")
    p = meta_rotation(scope);
  else
    throw std::logic_error("unreachable");
  return f.power == 1 ? p : perm_power(p, f.power);
}

Perm eval_transform(const std::string& expr, const Star& scope) {
  auto factors = parse_transform(expr);
  Perm r = identity_perm(scope.u.N);
  // Left-to-right factors compose so the rightmost acts first.
  for (auto& f : factors) r = compose(r, eval_factor(f, scope));
  return r;
}

Seg apply_to_seg(const std::string& expr, const Seg& s, int c) {
  for (auto& f : parse_transform(expr))
    if (f.base == "fbar")
      throw std::invalid_argument("fbar needs a star scope, not a bare segment");
  Star scope = build_star({s}, c, true);
  Perm p = eval_transform(expr, scope);
  return scope.u.seg(p[scope.u.find(s)]);
}

}  // namespace pcgrp
