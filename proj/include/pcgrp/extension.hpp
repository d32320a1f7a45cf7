#pragma once
// Meta-rotation group extensions, their duals, and construct-then-verify
// reports for every structural clause.
#include "pcgrp/star.hpp"

#include "json.hpp"

namespace pcgrp {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_pass() const;
  std::string first_failure() const;  // "" when everything passed
};

struct Extension {
  Star scope;
  bool has_fbar = false;
  Perm fbar;  // identity when absent
  std::vector<NamedPerm> gen_perms;  // the non-meta-rotation generators
  Group sub;                         // closure of gen_perms
  Group full;                        // closure of gen_perms plus fbar
  CheckReport report;

  int n_blocks() const { return (int)scope.u.blocks.size(); }
};

// Closure of the generators alone (no meta-rotation); report carries the
// order and transitivity facts.
Extension plain_group(const Star& scope, const std::vector<NamedPerm>& gens);

// Closure of the generators together with the star's meta-rotation.
// Verified: every generator commutes with the meta-rotation, the
// meta-rotation has order n, unique factorization g * fbar^i, the block
// shift is a homomorphism onto Z_n with the block-preserving part as
// kernel, the product is direct, and the extension inherits simple
// transitivity from the center action.
Extension extend_equivariant(const Star& scope, const std::vector<NamedPerm>& gens);

// Same closure but against an orientation-reversing bijection: f conjugates
// every group element to its inverse. The scope is one orbit whose halves
// (the orbit of position 0 under the group, and the rest) are swapped by f.
Extension extend_anti(const Star& scope, const std::vector<NamedPerm>& gens,
                      const NamedPerm& f);

// Dual of an equivariant extension: centralizer of the center action,
// pushed to every block by arm conjugation, closed with the meta-rotation.
// Verified: dual order, elementwise commutation with the primal, simple
// transitivity of both, and the composite-restriction formula
// (fbar . hbar on block j equals arm_{j+1} . h . arm_j^{-1}).
Extension dual_extension(const Extension& primal);

// The dual-pair hypothesis set for two anti-equivariant reconstructions
// (G with f, H with k), checked exhaustively over full element sets:
// f inverts G; k inverts H; k^-1 f = f^-1 k; G and H commute; f is
// H-equivariant; k is G-equivariant.
CheckReport anti_dual_hypotheses(const Group& g, const Perm& f, const Group& h,
                                 const Perm& k);

// (g, i) with p = g * fbar^i and g block-preserving in the subgroup part.
std::pair<Perm, int> canonical_decompose(const Extension& e, const Perm& p);

// Closure of every K_{i,j}, 1 <= i <= j <= segment length, on one orbit.
Group contextual_inversion_subgroup(const Universe& u);

// {order, simply_transitive, structure, coset_table, generator_names}
nlohmann::ordered_json group_report(const Extension& e);

nlohmann::ordered_json report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

}  // namespace pcgrp
