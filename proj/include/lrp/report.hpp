#pragma once

#include "lrp/classify.hpp"

namespace lrp {

// Everything the analyzer knows about one l-reflexive polygon.
struct InvariantReport {
  Int ell;
  Int nu;
  Int boundary_q, boundary_qstar;
  Int area2_q, area2_qstar;
  Int e_smooth;
  Rat k2_singular;
  Int k2_smooth;
  std::vector<Wve2cGraph::Triple> triples;
  std::vector<Wve2cGraph::Triple> dual_triples;
  bool twelve_ok = false;
  bool noether_ok = false;
  IdentityReport identities_ok;
  Int char_diff_qstar, char_diff_q;
  Int genus;
  bool tmp = false;
  Int rotation;
  CoverDecomposition cover;

  bool all_ok() const;
};

InvariantReport analyze(const LatticePolygon& q);

}  // namespace lrp
