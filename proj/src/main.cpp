// pcgrp: pitch-class segment groups, analyses, and matrix voicings.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcgrp/bijection.hpp"
#include "pcgrp/chords.hpp"
#include "pcgrp/extension.hpp"
#include "pcgrp/progression.hpp"
#include "pcgrp/scales.hpp"
#include "pcgrp/transforms.hpp"
#include "pcgrp/voicing.hpp"

using namespace pcgrp;

namespace {

struct ScopeSpec {
  Star star;
  std::string default_group;               // "ti", "t", or "" when custom
  std::vector<std::string> custom_exprs;   // generator expressions when custom
};

Star named_scope(const std::string& name) {
  if (name == "triads") return build_star({{0, 4, 7}}, 12, true);
  if (name == "dom7") return build_star({{0, 4, 7, 10}}, 12, true);
  if (name == "maj7") return build_star({{0, 4, 7, 11}}, 12, true);
  if (name == "min7") return build_star({{0, 4, 7, 9}}, 12, true);
  if (name == "dim7") return build_star({{1, 4, 7, 10}}, 12, true);
  if (name == "jazz") return build_star({{0, 4, 7}, {0, 4, 7, 10}}, 12, true);
  throw std::invalid_argument("unknown scope: " + name);
}

ScopeSpec resolve_scope(const std::string& scope_name, const std::string& star_file) {
  ScopeSpec r;
  if (!star_file.empty()) {
    StarConfig cfg = load_star_config(star_file);
    r.star = build_star(cfg);
    if (cfg.group_kind == "TI") r.default_group = "ti";
    else if (cfg.group_kind == "T") r.default_group = "t";
    else r.custom_exprs = cfg.custom_gens;
    return r;
  }
  r.star = named_scope(scope_name.empty() ? "jazz" : scope_name);
  r.default_group = "ti";
  return r;
}

std::vector<std::string> group_gen_exprs(const std::string& spec) {
  if (spec == "ti") return {"T1", "I0"};
  if (spec == "t") return {"T1"};
  if (spec == "plr") return {"P", "L", "R"};
  if (spec.rfind("custom:", 0) == 0) {
    std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<std::string> r;
    for (auto& g : j.at("generators")) r.push_back(g.get<std::string>());
    if (r.empty()) throw std::invalid_argument("group file lists no generators");
    return r;
  }
  throw std::invalid_argument("unknown group: " + spec);
}

// Group flag overrides the scope's own group. "fbar" in a custom list, or a
// builtin kind on a multi-block scope, closes with the meta-rotation.
Extension build_group(const ScopeSpec& scope, const std::string& group_flag) {
  std::vector<std::string> exprs;
  bool custom = false;
  if (!group_flag.empty()) {
    exprs = group_gen_exprs(group_flag);
    custom = group_flag.rfind("custom:", 0) == 0;
  } else if (!scope.custom_exprs.empty()) {
    exprs = scope.custom_exprs;
    custom = true;
  } else {
    exprs = group_gen_exprs(scope.default_group);
  }
  bool fbar_listed = false;
  std::vector<NamedPerm> gens;
  for (auto& e : exprs) {
    if (e == "fbar") {
      fbar_listed = true;
      continue;
    }
    gens.push_back({e, eval_transform(e, scope.star)});
  }
  bool with_fbar = custom ? fbar_listed : scope.star.block_count() > 1;
  if (fbar_listed && scope.star.block_count() < 2)
    throw std::invalid_argument("fbar needs a scope with at least two blocks");
  if (with_fbar) return extend_equivariant(scope.star, gens);
  return plain_group(scope.star, gens);
}

Seg resolve_chord(const std::string& text, int c) {
  if (!text.empty() && text[0] == '<') {
    Seg s = parse_seg(text);
    for (int& x : s) x = mod(x, c);
    return s;
  }
  if (c != 12)
    throw std::invalid_argument("chord symbols need modulus 12: " + text);
  auto sym = parse_chord(text);
  if (!sym) throw std::invalid_argument("cannot parse chord: " + text);
  return chord_seg(*sym);
}

Universe catalog_universe() {
  Universe u;
  for (ChordQuality q : {ChordQuality::Maj, ChordQuality::Dom7, ChordQuality::Maj7,
                         ChordQuality::Min7, ChordQuality::Dim7})
    u.blocks.push_back(build_orbit(catalog_generator(q), 12, true));
  u.finish();
  return u;
}

std::string pcset_chord_name(const std::set<int>& ps) {
  static Universe cat = catalog_universe();
  for (int p = 0; p < cat.N; ++p) {
    const Seg& s = cat.seg(p);
    if (std::set<int>(s.begin(), s.end()) == ps) {
      auto nm = chord_name(s, 12);
      if (nm) return *nm;
    }
  }
  return "";
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write: " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<Seg>> chord_rows(const std::string& path, int c) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<Seg>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto segs = parse_chord_list(line, c);
    if (!segs.empty()) rows.push_back(segs);
  }
  return rows;
}

int run_orbit(const std::string& seg_text, int modulus, const std::string& group,
              bool as_json) {
  Seg s = parse_seg(seg_text);
  for (int& x : s) x = mod(x, modulus);
  bool with_inv = group != "t";
  if (group != "t" && group != "ti")
    throw std::invalid_argument("orbit supports --group ti or t");
  Block b = build_orbit(s, modulus, with_inv);
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& e : b.elems) j.push_back(e);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (auto& e : b.elems) std::cout << format_seg(e) << "\n";
  return 0;
}

int run_apply(const std::string& expr, const std::string& chord,
              const std::string& scope_name, const std::string& star_file,
              int modulus, bool as_json) {
  Star scope;
  Seg s;
  if (!star_file.empty() || !scope_name.empty()) {
    ScopeSpec sc = resolve_scope(scope_name, star_file);
    scope = sc.star;
    s = resolve_chord(chord, scope.u.c());
  } else {
    s = resolve_chord(chord, modulus);
    scope = build_star({s}, modulus, true);
  }
  int from = scope.u.find(s);
  if (from < 0)
    throw std::invalid_argument("chord is outside the scope: " + format_seg(s));
  Perm p = eval_transform(expr, scope);
  const Seg& out = scope.u.seg(p[from]);
  auto nm = chord_name(out, scope.u.c());
  if (as_json) {
    nlohmann::ordered_json j;
    j["input"] = s;
    j["transform"] = expr;
    j["pcseg"] = out;
    j["chord"] = nm ? *nm : "";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << (nm ? *nm : format_seg(out)) << "\n";
  return 0;
}

int run_group(const std::string& scope_name, const std::string& star_file,
              const std::string& group_flag, bool verify, bool as_json) {
  ScopeSpec sc = resolve_scope(scope_name, star_file);
  Extension e = build_group(sc, group_flag);
  if (as_json) {
    nlohmann::ordered_json j = group_report(e);
    j["checks"] = report_json(e.report)["checks"];
    std::cout << j.dump(2) << "\n";
  } else if (verify) {
    std::cout << report_text(e.report);
    std::cout << "order = " << e.full.order() << "\n";
  } else {
    std::cout << "order = " << e.full.order() << "\n";
    std::cout << "simply transitive = "
              << (is_simply_transitive(e.full, e.scope.u.N) ? "yes" : "no") << "\n";
  }
  return e.report.all_pass() ? 0 : 1;
}

int run_dual(const std::string& scope_name, const std::string& star_file,
             const std::string& group_flag, bool as_json) {
  ScopeSpec sc = resolve_scope(scope_name, star_file);
  Extension primal = build_group(sc, group_flag);
  Extension d = dual_extension(primal);
  if (as_json) {
    nlohmann::ordered_json j;
    j["primal"] = group_report(primal);
    j["dual"] = group_report(d);
    j["checks"] = report_json(d.report)["checks"];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "primal order = " << primal.full.order() << "\n";
    std::cout << "dual order = " << d.full.order() << "\n";
    std::cout << report_text(d.report);
  }
  return primal.report.all_pass() && d.report.all_pass() ? 0 : 1;
}

int run_analyze(const std::string& chords_file, const std::string& scope_name,
                const std::string& star_file, const std::string& group_flag,
                const std::string& col_group, int grid_rows,
                const std::string& dot_path, const std::string& json_path) {
  ScopeSpec sc = resolve_scope(scope_name, star_file);
  Extension rowG = build_group(sc, group_flag);
  int c = sc.star.u.c();
  if (grid_rows > 0) {
    auto rows = chord_rows(chords_file, c);
    if ((int)rows.size() != grid_rows)
      throw std::invalid_argument("grid expects " + std::to_string(grid_rows) +
                                  " rows, file has " + std::to_string(rows.size()));
    Extension colG = build_group(sc, col_group.empty() ? "ti" : col_group);
    GridReport gr = verify_grid_network(rows, rowG, colG);
    for (size_t r = 0; r < rows.size(); ++r) {
      std::cout << "row " << r << ":";
      for (int k = 0; k < gr.network.grid_cols - 1; ++k)
        std::cout << " " << gr.network.edges[r * (gr.network.grid_cols - 1) + k].label
                  << (k + 2 < gr.network.grid_cols ? " |" : "");
      std::cout << "\n";
    }
    std::cout << "columns:";
    for (auto& l : gr.column_labels) std::cout << " " << (l.empty() ? "(mixed)" : l);
    std::cout << "\n";
    std::cout << report_text(gr.report);
    if (!dot_path.empty()) write_text(dot_path, emit_dot(gr.network));
    if (!json_path.empty()) {
      nlohmann::ordered_json j = network_json(gr.network);
      j["columns"] = gr.column_labels;
      j["checks"] = report_json(gr.report)["checks"];
      write_text(json_path, j.dump(2) + "\n");
    }
    return gr.report.all_pass() ? 0 : 1;
  }
  auto chords = load_chord_file(chords_file, c);
  Network net = analyze(chords, rowG);
  for (size_t i = 0; i < net.edges.size(); ++i)
    std::cout << node_label(net.nodes[i].seg, c) << " -> "
              << node_label(net.nodes[i + 1].seg, c) << " : " << net.edges[i].label
              << "\n";
  for (auto& run : detect_flip_flop(net))
    std::cout << "flip-flop: edges " << run.first_edge << ".."
              << run.first_edge + run.length - 1 << " alternate " << run.a << " / "
              << run.b << "\n";
  if (!dot_path.empty()) write_text(dot_path, emit_dot(net));
  if (!json_path.empty()) write_text(json_path, network_json(net).dump(2) + "\n");
  return 0;
}

std::map<char, int> parse_acc(const std::string& text) {
  std::map<char, int> r;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq != 1)
      throw std::invalid_argument("accidental spec must look like B=-1,E=0");
    r[tok[0]] = std::stoi(tok.substr(eq + 1));
  }
  return r;
}

int run_jcycle(const std::string& mode, const std::string& emit,
               const std::string& start_acc) {
  if (mode == "flatten") {
    auto steps = flattening_cycle(start_acc.empty() ? std::map<char, int>{}
                                                    : parse_acc(start_acc));
    if (emit == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (auto& s : steps) {
        nlohmann::ordered_json o;
        o["index"] = s.index;
        o["letter_flattened"] = std::string(1, s.letter);
        o["productive"] = s.productive;
        o["pcseg"] = s.pcseg;
        o["chord"] = s.chord;
        j.push_back(o);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (emit == "dot") {
      std::vector<Seg> order;
      std::map<Seg, int> id;
      auto node = [&](const Seg& s) {
        if (!id.count(s)) {
          id[s] = (int)order.size();
          order.push_back(s);
        }
        return id[s];
      };
      std::vector<std::array<int, 2>> arcs;
      std::vector<char> letters;
      Seg prev = steps.back().pcseg;  // the cycle closes, so the last chord is the start
      node(prev);
      for (auto& s : steps) {
        if (s.productive) {
          arcs.push_back({node(prev), node(s.pcseg)});
          letters.push_back(s.letter);
        }
        prev = s.pcseg;
      }
      std::ostringstream os;
      os << "digraph flattening {\n  rankdir=LR;\n  node [shape=box];\n";
      for (size_t i = 0; i < order.size(); ++i)
        os << "  n" << i << " [label=\"" << seventh_name(order[i]) << " "
           << format_seg(order[i]) << "\"];\n";
      for (size_t i = 0; i < arcs.size(); ++i)
        os << "  n" << arcs[i][0] << " -> n" << arcs[i][1] << " [label=\""
           << letters[i] << "\"];\n";
      os << "}\n";
      std::cout << os.str();
      return 0;
    }
    for (auto& s : steps)
      std::cout << s.index << " " << s.letter << " " << (s.productive ? "+" : "-")
                << " " << format_seg(s.pcseg) << " " << s.chord << "\n";
    return 0;
  }
  if (mode == "phi") {
    Seg t = phi_realize(3);
    if (emit == "dot")
      throw std::invalid_argument("jcycle --mode phi emits text or json");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int i = 1; i <= 28; ++i) {
      t = phi_map(t);
      if (emit == "json") {
        nlohmann::ordered_json o;
        o["index"] = i;
        o["tuple"] = t;
        j.push_back(o);
      } else {
        std::cout << i << " " << format_seg(t) << "\n";
      }
    }
    if (emit == "json") std::cout << j.dump(2) << "\n";
    return 0;
  }
  throw std::invalid_argument("jcycle --mode must be flatten or phi");
}

Vec4 parse_vec4(const std::string& text) {
  Vec4 v{};
  std::istringstream in(text);
  std::string tok;
  int i = 0;
  while (std::getline(in, tok, ',')) {
    if (i >= 4) throw std::invalid_argument("voicing vectors have four entries");
    v[i++] = mod(std::stoi(tok), 12);
  }
  if (i != 4) throw std::invalid_argument("voicing vectors have four entries");
  return v;
}

std::vector<Mat4> parse_schedule(const std::string& text) {
  std::vector<Mat4> r;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "sopr") r.push_back(soprano_matrix());
    else if (tok == "alto") r.push_back(alto_matrix());
    else if (tok == "tenor") r.push_back(tenor_matrix());
    else throw std::invalid_argument("schedule steps are sopr, alto, tenor");
  }
  if (r.empty()) throw std::invalid_argument("empty schedule");
  return r;
}

std::string vec_str(const Vec4& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << ")";
  return os.str();
}

int run_voicing_trace(const std::string& start, const std::string& schedule,
                      int cycles, bool as_json) {
  Vec4 v0 = parse_vec4(start);
  auto sched = parse_schedule(schedule);
  std::vector<Mat4> steps;
  for (int i = 0; i < cycles; ++i) steps.insert(steps.end(), sched.begin(), sched.end());
  auto tr = voicing_trace(v0, steps);
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& v : tr) {
      nlohmann::ordered_json o;
      o["voicing"] = std::vector<int>(v.begin(), v.end());
      o["chord"] = pcset_chord_name(vec_pcset(v));
      j.push_back(o);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (auto& v : tr) {
    std::string nm = pcset_chord_name(vec_pcset(v));
    std::cout << vec_str(v) << (nm.empty() ? "" : " " + nm) << "\n";
  }
  return 0;
}

int run_voicing_enumerate(bool as_json) {
  auto fam = enumerate_soprano_bass_family();
  for (auto& p : fam)
    if (!in_sl4(pair_matrix(p)))
      throw std::runtime_error("family member fails the determinant check");
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& p : fam) {
      nlohmann::ordered_json o;
      o["bass_row"] = std::vector<int>(p.a.begin(), p.a.end());
      o["soprano_row"] = std::vector<int>(p.d.begin(), p.d.end());
      j.push_back(o);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "count = " << fam.size() << "\n";
  for (auto& p : fam)
    std::cout << "a=" << vec_str(p.a) << " d=" << vec_str(p.d) << "\n";
  return 0;
}

int run_voicing_matrices() {
  auto show = [](const std::string& nm, const Mat4& m) {
    std::cout << nm << ": [";
    for (int i = 0; i < 4; ++i) {
      std::cout << "[";
      for (int j = 0; j < 4; ++j) std::cout << m[i][j] << (j < 3 ? "," : "");
      std::cout << (i < 3 ? "]," : "]");
    }
    std::cout << "] det=" << det_mod12(m) << " order=" << mat_order(m) << "\n";
  };
  show("soprano", soprano_matrix());
  show("alto", alto_matrix());
  show("tenor", tenor_matrix());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pitch-class segment groups and transformation networks"};
  app.require_subcommand(1);

  auto* orbit_cmd = app.add_subcommand("orbit", "canonical orbit of a segment");
  std::string orbit_seg, orbit_group = "ti";
  int orbit_modulus = 12;
  bool orbit_json = false;
  orbit_cmd->add_option("segment", orbit_seg, "pc-seg like \"<0,4,7>\"")->required();
  orbit_cmd->add_option("--modulus", orbit_modulus);
  orbit_cmd->add_option("--group", orbit_group, "ti or t");
  orbit_cmd->add_flag("--json", orbit_json);

  auto* apply_cmd = app.add_subcommand("apply", "apply a transform to a chord");
  std::string ap_expr, ap_chord, ap_scope, ap_star;
  int ap_modulus = 12;
  bool ap_json = false;
  apply_cmd->add_option("--transform", ap_expr)->required();
  apply_cmd->add_option("--chord", ap_chord)->required();
  apply_cmd->add_option("--scope", ap_scope, "triads|dom7|maj7|min7|dim7|jazz");
  apply_cmd->add_option("--star", ap_star, "star config file");
  apply_cmd->add_option("--modulus", ap_modulus);
  apply_cmd->add_flag("--json", ap_json);

  auto* group_cmd = app.add_subcommand("group", "build and verify a group");
  std::string g_scope, g_star, g_group;
  bool g_verify = false, g_json = false;
  group_cmd->add_option("--scope", g_scope);
  group_cmd->add_option("--star", g_star);
  group_cmd->add_option("--group", g_group, "ti|t|plr|custom:FILE");
  group_cmd->add_flag("--verify", g_verify);
  group_cmd->add_flag("--json", g_json);

  auto* dual_cmd = app.add_subcommand("dual", "dual of an extension");
  std::string d_scope, d_star, d_group;
  bool d_json = false;
  dual_cmd->add_option("--scope", d_scope);
  dual_cmd->add_option("--star", d_star);
  dual_cmd->add_option("--group", d_group);
  dual_cmd->add_flag("--json", d_json);

  auto* an_cmd = app.add_subcommand("analyze", "label a chord chain or grid");
  std::string an_chords, an_scope, an_star, an_group, an_col, an_dot, an_json;
  int an_grid = 0;
  an_cmd->add_option("--chords", an_chords)->required();
  an_cmd->add_option("--scope", an_scope);
  an_cmd->add_option("--star", an_star);
  an_cmd->add_option("--group", an_group, "ti|t|plr|custom:FILE");
  an_cmd->add_option("--col-group", an_col, "group for grid columns");
  an_cmd->add_option("--grid", an_grid, "row count; chord file lines are rows");
  an_cmd->add_option("--dot", an_dot, "write graphviz here ('-' for stdout)");
  an_cmd->add_option("--json", an_json, "write network json here");

  auto* jc_cmd = app.add_subcommand("jcycle", "flattening or tuple-step cycles");
  std::string jc_mode = "flatten", jc_emit = "text", jc_start;
  jc_cmd->add_option("--mode", jc_mode, "flatten or phi");
  jc_cmd->add_option("--emit", jc_emit, "text, json, or dot");
  jc_cmd->add_option("--start-acc", jc_start, "starting accidentals, e.g. B=-1,E=-1");

  auto* v_cmd = app.add_subcommand("voicing", "matrix voicing tools");
  v_cmd->require_subcommand(1);
  auto* vt = v_cmd->add_subcommand("trace", "iterate a voice-raising schedule");
  std::string vt_start = "4,9,0,4";
  std::string vt_sched = "sopr,sopr,alto,alto,alto,tenor,tenor,tenor,sopr,sopr,sopr,alto";
  int vt_cycles = 1;
  bool vt_json = false;
  vt->add_option("--start", vt_start);
  vt->add_option("--schedule", vt_sched);
  vt->add_option("--cycles", vt_cycles);
  vt->add_flag("--json", vt_json);
  auto* ve = v_cmd->add_subcommand("enumerate", "two-free-row family");
  bool ve_json = false;
  ve->add_flag("--json", ve_json);
  auto* vm = v_cmd->add_subcommand("matrices", "the three voice raisers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbit_cmd) return run_orbit(orbit_seg, orbit_modulus, orbit_group, orbit_json);
    if (*apply_cmd)
      return run_apply(ap_expr, ap_chord, ap_scope, ap_star, ap_modulus, ap_json);
    if (*group_cmd) return run_group(g_scope, g_star, g_group, g_verify, g_json);
    if (*dual_cmd) return run_dual(d_scope, d_star, d_group, d_json);
    if (*an_cmd)
      return run_analyze(an_chords, an_scope, an_star, an_group, an_col, an_grid,
                         an_dot, an_json);
    if (*jc_cmd) return run_jcycle(jc_mode, jc_emit, jc_start);
    if (*v_cmd) {
      if (*vt) return run_voicing_trace(vt_start, vt_sched, vt_cycles, vt_json);
      if (*ve) return run_voicing_enumerate(ve_json);
      if (*vm) return run_voicing_matrices();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
