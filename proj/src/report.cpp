#include "lrp/report.hpp"

namespace lrp {

bool InvariantReport::all_ok() const {
  if (!twelve_ok || !noether_ok || rotation.v != 1) return false;
  for (const auto& [name, ok] : identities_ok)
    if (ok && !*ok) return false;
  return true;
}

InvariantReport analyze(const LatticePolygon& q) {
  InvariantReport r;
  std::optional<Int> l = is_l_reflexive(q);
  if (!l) {
    // Distinguish the two failure modes for callers.
    edge_data(q);  // throws NOT_LDP when not LDP
    throw error(errc::not_l_reflexive, "analyze");
  }
  r.ell = *l;
  r.nu = Int(static_cast<long long>(q.size()));
  LatticePolygon d = dual(q);
  r.boundary_q = boundary_count(q);
  r.boundary_qstar = boundary_count(d);
  r.area2_q = area2(q);
  r.area2_qstar = area2(d);
  SmoothInvariants s = smooth_invariants(q);
  r.e_smooth = s.euler;
  r.k2_smooth = s.k2_smooth;
  K2Result k2 = k2_singular(q);
  r.k2_singular = k2.value;
  r.triples = combinatorial_triples(q);
  r.dual_triples = combinatorial_triples(d);
  TwelvePoint tp = twelve_point(q);
  r.twelve_ok = tp.ok;
  r.noether_ok = (s.k2_smooth + s.euler == Int(12));
  r.identities_ok = identities_report(q);
  r.identities_ok["k2_two_ways"] = k2.routes_agree;
  if (r.ell.v > 1) dual_cone_data(q);  // internal cross-checks
  CharDiffs cd = characteristic_differences(q);
  r.char_diff_qstar = cd.d_dual;
  r.char_diff_q = cd.d_q;
  Genus g = sectional_genus(q);
  r.genus = g.value;
  r.tmp = g.tmp;
  bool winding_ok = true;
  if (auto it = r.identities_ok.find("winding_number");
      it != r.identities_ok.end() && it->second)
    winding_ok = *it->second;
  r.rotation = winding_ok ? 1 : 0;
  r.cover = cover_decomposition(q);
  return r;
}

}  // namespace lrp
