#include "pcgrp/progression.hpp"

#include <sstream>
#include <stdexcept>

namespace pcgrp {

std::string canonical_label(const Extension& e, const Perm& p) {
  Perm g = p;
  int i = 0;
  if (e.has_fbar) {
    auto gi = canonical_decompose(e, p);
    g = gi.first;
    i = gi.second;
  }
  const Universe& u = e.scope.u;
  std::string gname;
  bool named = false;
  Perm id = identity_perm((int)g.size());
  int c = u.c();
  for (int n = 0; n < c && !named; ++n) {
    for (char kind : {'T', 'I'}) {
      TIElement t{kind, n};
      bool ok = true;
      for (int pt = 0; pt < u.N && ok; ++pt) {
        Seg img = t.apply(u.seg(pt), c);
        if (u.find(img) != g[pt]) ok = false;
      }
      if (ok) {
        gname = t.name();
        named = true;
        break;
      }
    }
  }
  if (!named) {
    auto w = word_of(e.sub, g);
    if (!w) throw std::runtime_error("canonical_label: element outside the group");
    gname = *w;
  }
  if (i == 0) return gname;
  std::string fb = i == 1 ? "fbar" : "fbar^" + std::to_string(i);
  if (g == id) return fb;
  return gname + "*" + fb;
}

static NetNode make_node(const Universe& u, const Seg& s, int id) {
  int pt = u.find(s);
  if (pt < 0)
    throw std::invalid_argument("analyze: segment not in scope: " + format_seg(s));
  NetNode n;
  n.id = id;
  n.seg = s;
  auto nm = chord_name(s, u.c());
  n.chord = nm ? *nm : "";
  n.block = u.loc(pt).first;
  return n;
}

static NetEdge solve_edge(const Extension& e, const Universe& u, int from, int to,
                          const Seg& a, const Seg& b, Perm& out) {
  int pa = u.find(a), pb = u.find(b);
  const Perm* p = unique_transform(e.full, pa, pb);
  if (!p)
    throw std::runtime_error("analyze: no unique transform " + format_seg(a) +
                             " -> " + format_seg(b));
  out = *p;
  NetEdge ed;
  ed.from = from;
  ed.to = to;
  ed.label = canonical_label(e, *p);
  auto w = word_of(e.full, *p);
  ed.word = w ? *w : ed.label;
  ed.shift = e.has_fbar ? canonical_decompose(e, *p).second : 0;
  return ed;
}

Network analyze(const std::vector<Seg>& chords, const Extension& e) {
  if (chords.size() < 2)
    throw std::invalid_argument("analyze: need at least two chords");
  const Universe& u = e.scope.u;
  Network net;
  net.c = u.c();
  for (size_t i = 0; i < chords.size(); ++i)
    net.nodes.push_back(make_node(u, chords[i], (int)i));
  for (size_t i = 0; i + 1 < chords.size(); ++i) {
    Perm p;
    net.edges.push_back(
        solve_edge(e, u, (int)i, (int)i + 1, chords[i], chords[i + 1], p));
    net.edge_perms.push_back(p);
  }
  return net;
}

std::vector<FlipFlopRun> detect_flip_flop(const Network& n) {
  std::vector<FlipFlopRun> runs;
  int m = (int)n.edges.size();
  auto involutive = [&](int i) {
    return compose(n.edge_perms[i], n.edge_perms[i]) ==
           identity_perm((int)n.edge_perms[i].size());
  };
  int i = 0;
  while (i + 1 < m) {
    if (involutive(i) && involutive(i + 1) &&
        n.edge_perms[i] != n.edge_perms[i + 1]) {
      int end = i + 2;
      while (end < m && n.edge_perms[end] == n.edge_perms[end - 2]) ++end;
      FlipFlopRun r;
      r.first_edge = i;
      r.length = end - i;
      r.a = n.edges[i].label;
      r.b = n.edges[i + 1].label;
      runs.push_back(r);
      i = end - 1;
    } else {
      ++i;
    }
  }
  return runs;
}

GridReport verify_grid_network(const std::vector<std::vector<Seg>>& rows,
                               const Extension& rowG, const Extension& colG) {
  GridReport gr;
  if (rows.empty() || rows[0].size() < 2)
    throw std::invalid_argument("verify_grid_network: need a non-empty grid");
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("verify_grid_network: ragged rows");
  const Universe& ur = rowG.scope.u;
  const Universe& uc = colG.scope.u;

  Network& net = gr.network;
  net.c = ur.c();
  net.grid_rows = (int)rows.size();
  net.grid_cols = (int)cols;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t k = 0; k < cols; ++k)
      net.nodes.push_back(make_node(ur, rows[r][k], (int)(r * cols + k)));

  std::vector<std::vector<Perm>> hperm(rows.size()), vperm;
  bool all_h = true, all_v = true;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t k = 0; k + 1 < cols; ++k) {
      Perm p;
      net.edges.push_back(solve_edge(rowG, ur, (int)(r * cols + k),
                                     (int)(r * cols + k + 1), rows[r][k],
                                     rows[r][k + 1], p));
      net.edge_perms.push_back(p);
      hperm[r].push_back(p);
    }
  }
  vperm.resize(rows.size() > 0 ? rows.size() - 1 : 0);
  for (size_t r = 0; r + 1 < rows.size(); ++r) {
    for (size_t k = 0; k < cols; ++k) {
      Perm p;
      net.edges.push_back(solve_edge(colG, uc, (int)(r * cols + k),
                                     (int)((r + 1) * cols + k), rows[r][k],
                                     rows[r + 1][k], p));
      net.edge_perms.push_back(p);
      vperm[r].push_back(p);
    }
  }
  gr.report.add("all row steps solved uniquely", all_h);
  gr.report.add("all column steps solved uniquely", all_v);

  bool squares = true;
  std::string bad;
  for (size_t r = 0; r + 1 < rows.size(); ++r)
    for (size_t k = 0; k + 1 < cols; ++k) {
      // around the square: down-then-right equals right-then-down
      Perm a = compose(hperm[r + 1][k], vperm[r][k]);
      Perm b = compose(vperm[r][k + 1], hperm[r][k]);
      if (a != b) {
        squares = false;
        if (bad.empty())
          bad = "square at row " + std::to_string(r) + ", column " +
                std::to_string(k);
      }
    }
  gr.report.add("every grid square commutes", squares, bad);

  for (size_t k = 0; k < cols; ++k) {
    bool uniform = true;
    for (size_t r = 1; r + 1 < rows.size(); ++r)
      if (vperm[r][k] != vperm[0][k]) uniform = false;
    gr.column_labels.push_back(
        uniform && !vperm.empty() ? canonical_label(colG, vperm[0][k]) : "");
  }
  bool cols_uniform = true;
  for (const auto& s : gr.column_labels)
    if (s.empty()) cols_uniform = false;
  gr.report.add("each column applies one element in every row", cols_uniform);
  return gr;
}

std::string emit_dot(const Network& n) {
  std::ostringstream os;
  os << "digraph progression {\n";
  os << (n.grid_rows > 0 ? "  rankdir=TB;\n" : "  rankdir=LR;\n");
  os << "  node [shape=box];\n";
  for (const auto& nd : n.nodes)
    os << "  n" << nd.id << " [label=\"" << node_label(nd.seg, n.c) << "\"];\n";
  if (n.grid_rows > 0) {
    for (int r = 0; r < n.grid_rows; ++r) {
      os << "  { rank=same;";
      for (int k = 0; k < n.grid_cols; ++k)
        os << " n" << r * n.grid_cols + k << ";";
      os << " }\n";
    }
  }
  for (const auto& e : n.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label
       << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json network_json(const Network& n) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& nd : n.nodes) {
    nlohmann::ordered_json o;
    o["id"] = nd.id;
    o["chord"] = nd.chord;
    o["pcseg"] = nd.seg;
    o["block"] = nd.block;
    j["nodes"].push_back(o);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : n.edges) {
    nlohmann::ordered_json o;
    o["from"] = e.from;
    o["to"] = e.to;
    o["label"] = e.label;
    o["word"] = e.word;
    o["shift"] = e.shift;
    j["edges"].push_back(o);
  }
  return j;
}

}  // namespace pcgrp
