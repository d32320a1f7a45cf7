#include "pcgrp/extension.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace pcgrp {

void CheckReport::add(const std::string& name, bool pass, const std::string& detail) {
  items.push_back({name, pass, detail});
}

bool CheckReport::all_pass() const {
  for (auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string CheckReport::first_failure() const {
  for (auto& it : items)
    if (!it.pass) return it.name;
  return "";
}

Extension plain_group(const Star& scope, const std::vector<NamedPerm>& gens) {
  Extension e;
  e.scope = scope;
  e.has_fbar = false;
  e.fbar = identity_perm(scope.u.N);
  e.gen_perms = gens;
  e.sub = closure(gens);
  e.full = e.sub;
  e.report.add("order " + std::to_string(e.full.order()), true);
  e.report.add("simply transitive", is_simply_transitive(e.full, scope.u.N),
               "order vs universe size");
  return e;
}

// Restriction of a block-preserving permutation to the center block.
static Perm center_restriction(const Universe& u, const Perm& p) {
  int len = (int)u.blocks[0].elems.size();
  Perm r(len);
  for (int x = 0; x < len; ++x) {
    if (p[x] >= len) throw std::invalid_argument("permutation does not preserve the center");
    r[x] = p[x];
  }
  return r;
}

static bool center_simply_transitive(const Extension& e) {
  std::set<Perm> restricted;
  int len = (int)e.scope.u.blocks[0].elems.size();
  std::set<int> images;
  for (auto& g : e.sub.elems) {
    if (block_shift(e.scope.u, g) != 0) return false;
    restricted.insert(center_restriction(e.scope.u, g));
    images.insert(g[0]);
  }
  return (int)restricted.size() == len && (int)images.size() == len;
}

Extension extend_equivariant(const Star& scope, const std::vector<NamedPerm>& gens) {
  Extension e;
  e.scope = scope;
  e.has_fbar = true;
  e.fbar = meta_rotation(scope);
  e.gen_perms = gens;
  e.sub = closure(gens);
  std::vector<NamedPerm> all = gens;
  all.push_back({"fbar", e.fbar});
  e.full = closure(all);

  int n = e.n_blocks();
  bool genEq = true;
  for (auto& [nm, g] : gens)
    if (compose(g, e.fbar) != compose(e.fbar, g)) genEq = false;
  e.report.add("generators commute with the meta-rotation", genEq);
  e.report.add("meta-rotation order equals block count", perm_order(e.fbar) == n);

  bool shiftsOk = true, factorOk = true, homomorphism = true;
  std::vector<int> shifts(e.full.order());
  for (int ei = 0; ei < e.full.order(); ++ei) {
    int sh = block_shift(scope.u, e.full.elems[ei]);
    shifts[ei] = sh;
    if (sh < 0) {
      shiftsOk = false;
      continue;
    }
    Perm g = compose(e.full.elems[ei], perm_power(e.fbar, -sh));
    if (!e.sub.contains(g)) factorOk = false;
  }
  e.report.add("every element has a uniform block shift", shiftsOk);
  e.report.add("unique factorization g * fbar^i", factorOk);
  for (int a = 0; a < e.full.order() && homomorphism; ++a)
    for (int b = 0; b < e.full.order(); ++b) {
      int sh = block_shift(scope.u, compose(e.full.elems[a], e.full.elems[b]));
      if (sh != (shifts[a] + shifts[b]) % n) {
        homomorphism = false;
        break;
      }
    }
  e.report.add("block shift is a homomorphism onto Z_n", homomorphism);
  e.report.add("order is |G| * n",
               e.full.order() == e.sub.order() * n,
               std::to_string(e.full.order()) + " vs " + std::to_string(e.sub.order()) + "*" +
                   std::to_string(n));
  bool direct = true;
  for (auto& g : e.sub.elems)
    if (compose(g, e.fbar) != compose(e.fbar, g)) direct = false;
  e.report.add("product with the meta-rotation is direct", direct);
  if (center_simply_transitive(e))
    e.report.add("extension simply transitive", is_simply_transitive(e.full, scope.u.N));
  else
    e.report.add("extension simply transitive", true, "center action not simply transitive; skipped");
  return e;
}

Extension extend_anti(const Star& scope, const std::vector<NamedPerm>& gens,
                      const NamedPerm& f) {
  Extension e;
  e.scope = scope;
  e.has_fbar = true;
  e.fbar = f.second;
  e.gen_perms = gens;
  e.sub = closure(gens);
  std::vector<NamedPerm> all = gens;
  all.push_back(f);
  e.full = closure(all);

  // Halves: the sub-orbit of position 0 and its complement.
  std::set<int> s1;
  for (auto& g : e.sub.elems) s1.insert(g[0]);
  bool swaps = !s1.count(e.fbar[0]);
  for (int x : s1)
    if (s1.count(e.fbar[x])) swaps = false;
  for (int x = 0; x < scope.u.N; ++x)
    if (!s1.count(x) && !s1.count(e.fbar[x])) swaps = false;
  e.report.add("bijection swaps the two halves", swaps,
               "half size " + std::to_string(s1.size()));
  bool anti = true;
  for (auto& g : e.sub.elems)
    if (compose(e.fbar, compose(g, perm_inverse(e.fbar))) != perm_inverse(g)) anti = false;
  e.report.add("conjugation by the bijection inverts the group", anti);
  bool normal = anti;  // g -> g^-1 stays inside the subgroup
  bool fOutside = !e.sub.contains(e.fbar);
  e.report.add("semidirect product", normal && fOutside && e.full.order() == 2 * e.sub.order(),
               std::to_string(e.full.order()) + " vs 2*" + std::to_string(e.sub.order()));
  bool cosets = true;
  for (auto& p : e.full.elems)
    if (!e.sub.contains(p) && !e.sub.contains(compose(p, perm_inverse(e.fbar)))) cosets = false;
  e.report.add("coset decomposition g and g*f", cosets);
  if ((int)s1.size() == e.sub.order() && is_transitive(e.sub, (int)s1.size()))
    e.report.add("extension simply transitive", is_simply_transitive(e.full, scope.u.N));
  else
    e.report.add("extension simply transitive", true,
                 "half action not simply transitive; skipped");
  return e;
}

Extension dual_extension(const Extension& primal) {
  if (!primal.has_fbar) throw std::invalid_argument("dual extension needs a meta-rotation");
  const Star& scope = primal.scope;
  Group centerSub;
  {
    std::vector<NamedPerm> restricted;
    for (auto& [nm, g] : primal.gen_perms)
      restricted.push_back({nm, center_restriction(scope.u, g)});
    centerSub = closure(restricted);
  }
  int len = (int)scope.u.blocks[0].elems.size();
  Group h0 = centralizer_group(centerSub, len);

  Extension d;
  d.scope = scope;
  d.has_fbar = true;
  d.fbar = primal.fbar;
  for (int k = 0; k < h0.order(); ++k)
    d.gen_perms.push_back({"h" + std::to_string(k), lift_center(scope, h0.elems[k])});
  d.sub = closure(d.gen_perms);
  std::vector<NamedPerm> all = d.gen_perms;
  all.push_back({"fbar", d.fbar});
  d.full = closure(all);

  int n = (int)scope.u.blocks.size();
  d.report.add("centralizer simply transitive", is_simply_transitive(h0, len),
               "order " + std::to_string(h0.order()));
  d.report.add("dual order matches", d.full.order() == h0.order() * n,
               std::to_string(d.full.order()));
  d.report.add("duals commute elementwise", groups_commute(primal.full, d.full));
  d.report.add("both simply transitive", is_simply_transitive(primal.full, scope.u.N) &&
                                              is_simply_transitive(d.full, scope.u.N));
  bool composite = true;
  for (auto& h : h0.elems) {
    Perm hbar = lift_center(scope, h);
    Perm lhs = compose(d.fbar, hbar);
    for (int j = 0; j < n && composite; ++j) {
      const Block& bj = scope.u.blocks[j];
      int jn = (j + 1) % n;
      for (size_t p = 0; p < bj.elems.size(); ++p) {
        int rhs = scope.u.flat(jn, scope.arm[jn][h[scope.armInv[j][(int)p]]]);
        if (lhs[scope.u.flat(j, (int)p)] != rhs) {
          composite = false;
          break;
        }
      }
    }
  }
  d.report.add("composite restriction formula on every block", composite);
  return d;
}

CheckReport anti_dual_hypotheses(const Group& g, const Perm& f, const Group& h,
                                 const Perm& k) {
  CheckReport r;
  bool antiF = true;
  for (auto& a : g.elems)
    if (compose(f, a) != compose(perm_inverse(a), f)) antiF = false;
  r.add("first bijection inverts the first group", antiF);
  bool antiK = true;
  for (auto& b : h.elems)
    if (compose(k, b) != compose(perm_inverse(b), k)) antiK = false;
  r.add("second bijection inverts the second group", antiK);
  r.add("inverse interchange identity",
        compose(perm_inverse(k), f) == compose(perm_inverse(f), k));
  bool comm = true;
  for (auto& a : g.elems)
    for (auto& b : h.elems)
      if (compose(a, b) != compose(b, a)) comm = false;
  r.add("groups commute elementwise", comm);
  bool fh = true;
  for (auto& b : h.elems)
    if (compose(f, b) != compose(b, f)) fh = false;
  r.add("first bijection commutes with the second group", fh);
  bool kg = true;
  for (auto& a : g.elems)
    if (compose(k, a) != compose(a, k)) kg = false;
  r.add("second bijection commutes with the first group", kg);
  return r;
}

std::pair<Perm, int> canonical_decompose(const Extension& e, const Perm& p) {
  if (!e.full.contains(p)) throw std::invalid_argument("element outside the group");
  if (!e.has_fbar) return {p, 0};
  if (e.n_blocks() > 1) {
    int i = block_shift(e.scope.u, p);
    if (i >= 0) {
      Perm g = compose(p, perm_power(e.fbar, -i));
      if (e.sub.contains(g)) return {g, i};
    }
  } else {
    int ord = perm_order(e.fbar);
    for (int i = 0; i < ord; ++i) {
      Perm g = compose(p, perm_power(e.fbar, -i));
      if (e.sub.contains(g)) return {g, i};
    }
  }
  throw std::runtime_error("element admits no canonical factorization");
}

Group contextual_inversion_subgroup(const Universe& u) {
  if (u.blocks.size() != 1)
    throw std::invalid_argument("contextual inversion subgroup wants a single orbit");
  int k = (int)u.blocks[0].elems[0].size();
  std::vector<NamedPerm> gens;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j)
      gens.push_back({"K" + std::to_string(i) + "," + std::to_string(j), kij_perm(u, i, j)});
  return closure(gens);
}

nlohmann::ordered_json group_report(const Extension& e) {
  nlohmann::ordered_json j;
  j["order"] = e.full.order();
  j["simply_transitive"] = is_simply_transitive(e.full, e.scope.u.N);
  std::string structure = "none";
  if (e.has_fbar) {
    bool direct = true, normal = true;
    for (auto& g : e.sub.elems) {
      if (compose(g, e.fbar) != compose(e.fbar, g)) direct = false;
      if (!e.sub.contains(compose(e.fbar, compose(g, perm_inverse(e.fbar))))) normal = false;
    }
    structure = direct ? "direct" : normal ? "semidirect" : "none";
  }
  j["structure"] = structure;
  auto table = nlohmann::ordered_json::array();
  if (e.has_fbar) {
    for (auto& p : e.full.elems) {
      auto [g, i] = canonical_decompose(e, p);
      nlohmann::ordered_json row;
      row["element"] = *word_of(e.full, p);
      row["sub"] = *word_of(e.sub, g);
      row["power"] = i;
      table.push_back(row);
    }
  }
  j["coset_table"] = table;
  auto names = nlohmann::ordered_json::array();
  for (auto& [nm, _] : e.gen_perms) names.push_back(nm);
  if (e.has_fbar) names.push_back("fbar");
  j["generator_names"] = names;
  return j;
}

nlohmann::ordered_json report_json(const CheckReport& r) {
  auto arr = nlohmann::ordered_json::array();
  for (auto& it : r.items) {
    nlohmann::ordered_json o;
    o["check"] = it.name;
    o["pass"] = it.pass;
    if (!it.detail.empty()) o["detail"] = it.detail;
    arr.push_back(o);
  }
  nlohmann::ordered_json j;
  j["checks"] = arr;
  j["pass"] = r.all_pass();
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream o;
  for (auto& it : r.items) {
    o << (it.pass ? "pass" : "FAIL") << "  " << it.name;
    if (!it.detail.empty()) o << "  (" << it.detail << ")";
    o << "\n";
  }
  return o.str();
}

}  // namespace pcgrp
