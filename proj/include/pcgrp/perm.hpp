#pragma once
// Permutations as dense image arrays plus generated groups with
// breadth-first shortest words over the given generators.
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcgrp {

using Perm = std::vector<int>;
using NamedPerm = std::pair<std::string, Perm>;

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q);  // (p.q)(x) = p(q(x))
Perm perm_inverse(const Perm& p);
Perm perm_power(const Perm& p, int k);
int perm_order(const Perm& p);

struct Group {
  std::vector<Perm> elems;  // breadth-first discovery order; elems[0] = id
  std::map<Perm, int> index;
  std::vector<std::string> words;  // "" for the identity, factors joined by '*'
  std::vector<NamedPerm> gens;

  int order() const { return (int)elems.size(); }
  bool contains(const Perm& p) const { return index.count(p) != 0; }
};

// Breadth-first closure. Each generator also expands through its inverse,
// suffixed "^-1"; word factors read right-to-left as function composition
// (the rightmost factor acts first).
Group closure(const std::vector<NamedPerm>& gens, size_t cap = 1000000);

bool is_transitive(const Group& g, int n_points);
bool is_simply_transitive(const Group& g, int n_points);

// All permutations of n points commuting with every element of g;
// g must be transitive from point 0 so candidates are forced pointwise.
Group centralizer_group(const Group& g, int n_points);

bool groups_commute(const Group& a, const Group& b);
bool same_element_set(const Group& a, const Group& b);

// The unique element with p(a) = b; nullptr when zero or several exist.
const Perm* unique_transform(const Group& g, int a, int b);

std::optional<std::string> word_of(const Group& g, const Perm& p);

// Multiset of element orders, as order -> count.
std::map<int, int> order_census(const Group& g);

}  // namespace pcgrp
