#include "pcgrp/perm.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace pcgrp {

Perm identity_perm(int n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = (int)x;
  return r;
}

Perm perm_power(const Perm& p, int k) {
  Perm base = k < 0 ? perm_inverse(p) : p;
  int e = k < 0 ? -k : k;
  Perm r = identity_perm((int)p.size());
  for (int i = 0; i < e; ++i) r = compose(r, base);
  return r;
}

int perm_order(const Perm& p) {
  Perm id = identity_perm((int)p.size());
  Perm q = p;
  int k = 1;
  while (q != id) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

Group closure(const std::vector<NamedPerm>& gens, size_t cap) {
  Group g;
  g.gens = gens;
  int n = gens.empty() ? 0 : (int)gens[0].second.size();
  std::vector<NamedPerm> expand = gens;
  for (auto& [nm, p] : gens) expand.push_back({nm + "^-1", perm_inverse(p)});
  Perm e = identity_perm(n);
  g.index[e] = 0;
  g.elems.push_back(e);
  g.words.push_back("");
  for (size_t head = 0; head < g.elems.size(); ++head) {
    for (auto& [nm, gp] : expand) {
      Perm next = compose(g.elems[head], gp);
      if (!g.index.count(next)) {
        if (g.elems.size() >= cap) throw std::runtime_error("group closure cap exceeded");
        g.index[next] = (int)g.elems.size();
        g.elems.push_back(next);
        g.words.push_back(g.words[head].empty() ? nm : g.words[head] + "*" + nm);
      }
    }
  }
  return g;
}

bool is_transitive(const Group& g, int n_points) {
  std::set<int> img;
  for (auto& p : g.elems) img.insert(p[0]);
  return (int)img.size() == n_points;
}

bool is_simply_transitive(const Group& g, int n_points) {
  return g.order() == n_points && is_transitive(g, n_points);
}

Group centralizer_group(const Group& g, int n_points) {
  Group h;
  for (int t = 0; t < n_points; ++t) {
    Perm cand(n_points, -1);
    for (auto& p : g.elems) cand[p[0]] = p[t];
    bool ok = true;
    std::set<int> seen;
    for (int x : cand) {
      if (x < 0 || seen.count(x)) {
        ok = false;
        break;
      }
      seen.insert(x);
    }
    if (ok)
      for (auto& p : g.elems)
        if (compose(cand, p) != compose(p, cand)) {
          ok = false;
          break;
        }
    if (ok && !h.index.count(cand)) {
      h.index[cand] = (int)h.elems.size();
      h.elems.push_back(cand);
      h.words.push_back("");
    }
  }
  return h;
}

bool groups_commute(const Group& a, const Group& b) {
  for (auto& p : a.elems)
    for (auto& q : b.elems)
      if (compose(p, q) != compose(q, p)) return false;
  return true;
}

bool same_element_set(const Group& a, const Group& b) {
  if (a.elems.size() != b.elems.size()) return false;
  for (auto& p : a.elems)
    if (!b.index.count(p)) return false;
  return true;
}

const Perm* unique_transform(const Group& g, int a, int b) {
  const Perm* found = nullptr;
  for (auto& p : g.elems)
    if (p[a] == b) {
      if (found) return nullptr;
      found = &p;
    }
  return found;
}

std::optional<std::string> word_of(const Group& g, const Perm& p) {
  auto it = g.index.find(p);
  if (it == g.index.end()) return std::nullopt;
  return g.words[it->second];
}

std::map<int, int> order_census(const Group& g) {
  std::map<int, int> census;
  for (auto& p : g.elems) census[perm_order(p)]++;
  return census;
}

}  // namespace pcgrp
