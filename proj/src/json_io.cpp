#include "lrp/json_io.hpp"

#include <sstream>

namespace lrp {

using nlohmann::json;

namespace {

json triples_json(const std::vector<Wve2cGraph::Triple>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back({t.r.v, t.p.v, t.q.v});
  return a;
}

json identities_json(const IdentityReport& rep) {
  json o = json::object();
  for (const auto& [name, ok] : rep) o[name] = ok ? json(*ok) : json("skipped: ell=1");
  return o;
}

}  // namespace

json to_json(const InvariantReport& r) {
  json o;
  o["ell"] = r.ell.v;
  o["nu"] = r.nu.v;
  o["boundary_Q"] = r.boundary_q.v;
  o["boundary_Qstar"] = r.boundary_qstar.v;
  o["area2_Q"] = r.area2_q.v;
  o["area2_Qstar"] = r.area2_qstar.v;
  o["e_smooth"] = r.e_smooth.v;
  o["K2_singular"] = r.k2_singular.str();
  o["K2_smooth"] = r.k2_smooth.v;
  o["triples"] = triples_json(r.triples);
  o["dual_triples"] = triples_json(r.dual_triples);
  o["twelve_ok"] = r.twelve_ok;
  o["noether_ok"] = r.noether_ok;
  o["identities_ok"] = identities_json(r.identities_ok);
  o["char_diff_Qstar"] = r.char_diff_qstar.v;
  o["char_diff_Q"] = r.char_diff_q.v;
  o["genus"] = r.genus.v;
  o["tmp"] = r.tmp;
  o["rotation"] = r.rotation.v;
  o["cover"] = {{"j", r.cover.j}, {"k", r.cover.k.v}};
  return o;
}

json polygon_json(const LatticePolygon& p) {
  json verts = json::array();
  for (Point2 q : p.v) verts.push_back({q.x.v, q.y.v});
  return {{"vertices", verts}};
}

LatticePolygon polygon_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw error(errc::parse_error, "expected {\"vertices\": [[x,y],...]}");
  std::vector<Point2> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2)
      throw error(errc::parse_error, "vertex must be a pair");
    pts.push_back({v[0].get<long long>(), v[1].get<long long>()});
  }
  return make_polygon(std::move(pts));
}

json to_json(const ClassTable& t) {
  json classes = json::array();
  for (const ClassEntry& c : t.classes) {
    json e;
    e["key"] = graph_key_string(c.key);
    e["vertices"] = polygon_json(c.rep)["vertices"];
    e["nu"] = c.nu;
    e["boundary"] = {c.boundary_q.v, c.boundary_dual.v};
    e["genus"] = c.genus.v;
    e["tmp"] = c.tmp;
    e["cover"] = {{"j", c.j}, {"k", c.k.v}};
    classes.push_back(e);
  }
  return {{"ell", t.ell.v}, {"classes", classes}};
}

json to_json(const std::vector<CountRow>& rows, bool tmp) {
  json a = json::array();
  for (const CountRow& r : rows) {
    json o;
    o["ell"] = r.ell.v;
    o["counts"] = {{"3", r.by_nu[0]}, {"4", r.by_nu[1]}, {"5", r.by_nu[2]}, {"6", r.by_nu[3]}};
    o["total"] = r.total;
    if (tmp) o["genus"] = r.genus.v;
    a.push_back(o);
  }
  return a;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "ell            " << r.ell.v << "\n";
  os << "vertices       " << r.nu.v << "\n";
  os << "boundary       Q: " << r.boundary_q.v << "   Q*: " << r.boundary_qstar.v
     << "   (sum " << (r.boundary_q + r.boundary_qstar).v << ")\n";
  os << "area2          Q: " << r.area2_q.v << "   Q*: " << r.area2_qstar.v << "\n";
  os << "euler (smooth) " << r.e_smooth.v << "\n";
  os << "K^2 (smooth)   " << r.k2_smooth.v << "\n";
  os << "K^2 (surface)  " << r.k2_singular.str() << "\n";
  auto print_triples = [&](const char* label, const std::vector<Wve2cGraph::Triple>& ts) {
    os << label;
    for (const auto& t : ts)
      os << " (" << t.p.v << "," << t.q.v << ";r=" << t.r.v << ")";
    os << "\n";
  };
  print_triples("cones          ", r.triples);
  os << "socii          ";
  for (const auto& t : r.triples) os << " " << socius(t.p, t.q).v;
  os << "\n";
  os << "expansions     ";
  for (const auto& t : r.triples) {
    os << " [";
    if (t.q.v > 1) {
      bool first = true;
      for (Int b : hj_expansion(t.q, t.q - t.p)) {
        os << (first ? "" : ",") << b.v;
        first = false;
      }
    }
    os << "]";
  }
  os << "\n";
  print_triples("dual cones     ", r.dual_triples);
  os << "char diffs     I(Q*): " << r.char_diff_qstar.v << "   I(Q): " << r.char_diff_q.v << "\n";
  os << "genus          " << r.genus.v << (r.tmp ? "   (mirror pair)" : "") << "\n";
  os << "cover          j=" << r.cover.j << " k=" << r.cover.k.v << "\n";
  os << "twelve-point   " << (r.twelve_ok ? "ok" : "FAILED") << "\n";
  os << "noether        " << (r.noether_ok ? "ok" : "FAILED") << "\n";
  os << "identities    ";
  for (const auto& [name, ok] : r.identities_ok)
    os << " " << name << "=" << (ok ? (*ok ? "ok" : "FAILED") : "skipped");
  os << "\n";
  return os.str();
}

}  // namespace lrp
