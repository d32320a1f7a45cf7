#include "pcgrp/base.hpp"

#include <sstream>
#include <stdexcept>

namespace pcgrp {

int mod(int a, int c) {
  int r = a % c;
  return r < 0 ? r + c : r;
}

Seg transpose_seg(const Seg& s, int n, int c) {
  Seg r(s.size());
  for (size_t k = 0; k < s.size(); ++k) r[k] = mod(s[k] + n, c);
  return r;
}

Seg invert_seg(const Seg& s, int n, int c) {
  Seg r(s.size());
  for (size_t k = 0; k < s.size(); ++k) r[k] = mod(n - s[k], c);
  return r;
}

Seg retrograde_seg(const Seg& s) { return Seg(s.rbegin(), s.rend()); }

Seg TIElement::apply(const Seg& s, int c) const {
  return kind == 'T' ? transpose_seg(s, n, c) : invert_seg(s, n, c);
}

TIElement TIElement::compose(const TIElement& rhs, int c) const {
  // T_a T_b = T_{a+b}; T_a I_b = I_{a+b}; I_a T_b = I_{a-b}; I_a I_b = T_{a-b}
  if (kind == 'T') return {rhs.kind, mod(n + rhs.n, c)};
  return {rhs.kind == 'T' ? 'I' : 'T', mod(n - rhs.n, c)};
}

TIElement TIElement::inverse(int c) const {
  return kind == 'T' ? TIElement{'T', mod(-n, c)} : *this;
}

std::string TIElement::name() const { return std::string(1, kind) + std::to_string(n); }

bool tritone_condition(const Seg& s, int c) {
  for (size_t q = 0; q < s.size(); ++q)
    for (size_t r = q + 1; r < s.size(); ++r) {
      int d = mod(s[q] - s[r], c);
      if (d != 0 && mod(2 * d, c) != 0) return true;
    }
  return false;
}

std::vector<TIElement> seg_stabilizer(const Seg& s, int c) {
  std::vector<TIElement> out;
  for (int n = 0; n < c; ++n)
    if (transpose_seg(s, n, c) == s) out.push_back({'T', n});
  for (int n = 0; n < c; ++n)
    if (invert_seg(s, n, c) == s) out.push_back({'I', n});
  return out;
}

bool stabilizer_is_trivial(const Seg& s, int c) { return seg_stabilizer(s, c).size() == 1; }

std::optional<TIElement> ti_solve(const Seg& a, const Seg& b, int c) {
  std::optional<TIElement> found;
  for (int n = 0; n < c; ++n)
    if (transpose_seg(a, n, c) == b) {
      if (found) throw std::runtime_error("ti_solve: multiple solutions");
      found = TIElement{'T', n};
    }
  for (int n = 0; n < c; ++n)
    if (invert_seg(a, n, c) == b) {
      if (found) throw std::runtime_error("ti_solve: multiple solutions");
      found = TIElement{'I', n};
    }
  return found;
}

Seg contextual_inversion_seg(const Seg& s, int i, int j, int c) {
  if (i < 1 || j < 1 || i > (int)s.size() || j > (int)s.size())
    throw std::invalid_argument("contextual inversion index out of range");
  return invert_seg(s, mod(s[i - 1] + s[j - 1], c), c);
}

std::string format_seg(const Seg& s) {
  std::ostringstream o;
  o << '<';
  for (size_t k = 0; k < s.size(); ++k) o << (k ? "," : "") << s[k];
  o << '>';
  return o.str();
}

Seg parse_seg(const std::string& text) {
  size_t a = text.find('<'), b = text.find('>');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw std::invalid_argument("pc-seg must look like <0,4,7>: " + text);
  Seg out;
  std::string body = text.substr(a + 1, b - a - 1);
  for (size_t q = body.size(); q-- > 0;) {
    if (isspace((unsigned char)body[q])) continue;
    if (body[q] == ',') throw std::invalid_argument("trailing comma in pc-seg: " + text);
    break;
  }
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && isspace((unsigned char)item[pos])) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad pc-seg entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty pc-seg: " + text);
  return out;
}

}  // namespace pcgrp
