#include "pcgrp/bijection.hpp"

#include <functional>
#include <stdexcept>

namespace pcgrp {

Seg OrbitBijection::apply(const Seg& s) const {
  int p = src.find(s);
  if (p < 0) throw std::invalid_argument("segment outside bijection source: " + format_seg(s));
  return dst.elems[table[p]];
}

Seg OrbitBijection::unapply(const Seg& s) const {
  int p = dst.find(s);
  if (p < 0) throw std::invalid_argument("segment outside bijection target: " + format_seg(s));
  return src.elems[perm_inverse(table)[p]];
}

OrbitBijection OrbitBijection::inverse() const {
  OrbitBijection r;
  r.c = c;
  r.src = dst;
  r.dst = src;
  r.table = perm_inverse(table);
  r.name = name + "^-1";
  return r;
}

static Perm block_perm(const Block& b, const std::function<Seg(const Seg&)>& f) {
  Perm r(b.elems.size());
  for (size_t p = 0; p < b.elems.size(); ++p) {
    int q = b.find(f(b.elems[p]));
    if (q < 0) throw std::invalid_argument("image leaves the orbit");
    r[p] = q;
  }
  return r;
}

Perm block_ti_perm(const Block& b, TIElement e) {
  return block_perm(b, [&](const Seg& s) { return e.apply(s, b.c); });
}

Perm block_schritt(const Block& b, int i) {
  Perm r(b.elems.size());
  for (size_t p = 0; p < b.elems.size(); ++p) {
    int sh = b.kind[p] == 'T' ? i : -i;
    int q = b.find(transpose_seg(b.elems[p], sh, b.c));
    if (q < 0) throw std::invalid_argument("schritt image leaves the orbit");
    r[p] = q;
  }
  return r;
}

Perm block_kij(const Block& b, int i, int j) {
  return block_perm(b, [&](const Seg& s) { return contextual_inversion_seg(s, i, j, b.c); });
}

OrbitBijection extend_assignment(const Seg& srcSeg, const Seg& dstSeg, int c,
                                 bool with_inversions) {
  OrbitBijection b;
  b.c = c;
  b.src = build_orbit(srcSeg, c, with_inversions);
  b.dst = build_orbit(dstSeg, c, with_inversions);
  size_t full = with_inversions ? 2 * c : c;
  if (b.src.elems.size() != full)
    throw std::invalid_argument("source orbit is not full sized (nontrivial stabilizer): " +
                                format_seg(srcSeg));
  if (b.dst.elems.size() != full)
    throw std::invalid_argument("target orbit is not full sized (nontrivial stabilizer): " +
                                format_seg(dstSeg));
  b.table.resize(b.src.elems.size());
  for (size_t p = 0; p < b.src.elems.size(); ++p) {
    TIElement via{b.src.kind[p], b.src.idx[p]};
    int q = b.dst.find(via.apply(dstSeg, c));
    if (q < 0) throw std::logic_error("full orbit misses an equivariant image");
    b.table[p] = q;
  }
  if (check_equivariance_ti(b, with_inversions) != Equivariance::equivariant)
    throw std::logic_error("extended assignment failed its equivariance check");
  b.name = format_seg(srcSeg) + "->" + format_seg(dstSeg);
  return b;
}

OrbitBijection pcseg_extension_bijection(const Seg& src, const Seg& dst, int c) {
  if (dst.size() < src.size() || !std::equal(src.begin(), src.end(), dst.begin()))
    throw std::invalid_argument("target must extend the source as a prefix");
  if (!tritone_condition(src, c))
    throw std::invalid_argument("tritone condition fails on " + format_seg(src));
  return extend_assignment(src, dst, c);
}

OrbitBijection pcseg_modification_bijection(const Seg& src, int position, int newPc, int c) {
  if (position < 1 || position > (int)src.size())
    throw std::invalid_argument("modification position out of range");
  Seg modified = src;
  modified[position - 1] = mod(newPc, c);
  if (!tritone_condition(src, c))
    throw std::invalid_argument("tritone condition fails on " + format_seg(src));
  if (!tritone_condition(modified, c))
    throw std::invalid_argument("tritone condition fails on " + format_seg(modified));
  return extend_assignment(src, modified, c);
}

Seg table2_formula(Table2 which, const Seg& triad, int c) {
  if (triad.size() != 3) throw std::invalid_argument("formula wants a three-entry segment");
  int w = triad[0], x = triad[1], y = triad[2];
  switch (which) {
    case Table2::Dom7Tr: return {w, x, y, mod(2 * y - x, c)};
    case Table2::Maj7Tr: return {w, x, y, mod(x + y - w, c)};
    case Table2::Min7Tr: return {w, x, y, mod(w + x - y, c)};
    case Table2::Dim7Tr: return {mod(2 * x - y, c), x, y, mod(2 * y - x, c)};
  }
  throw std::logic_error("unreachable");
}

OrbitBijection table2_bijection(Table2 which, bool alt_min7) {
  static const char* kNames[] = {"Dom7Tr", "Maj7Tr", "Min7Tr", "Dim7Tr"};
  Seg triadGen = {0, 4, 7};
  OrbitBijection byAssign =
      extend_assignment(triadGen, table2_formula(which, triadGen, 12), 12);
  for (auto& s : byAssign.src.elems)
    if (byAssign.apply(s) != table2_formula(which, s, 12))
      throw std::logic_error("formula route disagrees with the equivariant extension");
  if (which == Table2::Min7Tr && alt_min7) {
    // Alternate encoding: the minor triad <4,0,9> goes to <9,0,4,7>, so the
    // image of <0,4,7> is I_4 of that.
    OrbitBijection alt = extend_assignment(triadGen, Seg{7, 4, 0, 9}, 12);
    alt.name = kNames[(int)which];
    return alt;
  }
  byAssign.name = kNames[(int)which];
  return byAssign;
}

Equivariance check_equivariance(const OrbitBijection& b,
                                const std::vector<std::pair<Perm, Perm>>& action) {
  bool eq = true, anti = true;
  for (auto& [gs, gd] : action) {
    Perm lhs = compose(b.table, gs);
    if (lhs != compose(gd, b.table)) eq = false;
    if (lhs != compose(perm_inverse(gd), b.table)) anti = false;
    if (!eq && !anti) return Equivariance::neither;
  }
  if (eq) return Equivariance::equivariant;
  return Equivariance::anti_equivariant;
}

Equivariance check_equivariance_ti(const OrbitBijection& b, bool with_inversions) {
  std::vector<std::pair<Perm, Perm>> action;
  for (int n = 0; n < b.c; ++n)
    action.push_back({block_ti_perm(b.src, {'T', n}), block_ti_perm(b.dst, {'T', n})});
  if (with_inversions)
    for (int n = 0; n < b.c; ++n)
      action.push_back({block_ti_perm(b.src, {'I', n}), block_ti_perm(b.dst, {'I', n})});
  return check_equivariance(b, action);
}

Perm conjugate_perm(const OrbitBijection& b, const Perm& g) {
  return compose(b.table, compose(g, perm_inverse(b.table)));
}

std::vector<Perm> conjugate_perms(const OrbitBijection& b, const std::vector<Perm>& gs) {
  std::vector<Perm> out;
  out.reserve(gs.size());
  for (auto& g : gs) out.push_back(conjugate_perm(b, g));
  return out;
}

}  // namespace pcgrp
