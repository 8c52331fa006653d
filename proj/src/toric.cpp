#include "lrp/toric.hpp"

#include <algorithm>

namespace lrp {

namespace {

void require_ldp(const LatticePolygon& q) {
  if (!origin_interior(q)) throw error(errc::not_ldp, "origin not interior");
  for (Point2 p : q.v)
    if (!is_primitive(p)) throw error(errc::not_ldp, "non-primitive vertex");
}

Int local_index_of(const ConeType& t) { return exact_div(t.q, gcd(t.q, t.p - Int(1))); }

// Cone types of all edges without Hilbert chains; enough for LDP filtering.
std::vector<ConeType> edge_types(const LatticePolygon& q) {
  require_ldp(q);
  std::vector<ConeType> out;
  out.reserve(q.size());
  for (size_t i = 0; i < q.size(); ++i)
    out.push_back(cone_type(q.v[i], q.at(static_cast<long long>(i) + 1)));
  return out;
}

Int require_reflexive(const LatticePolygon& q) {
  std::optional<Int> l = is_l_reflexive(q);
  if (!l) throw error(errc::not_l_reflexive, "polygon is not l-reflexive");
  return *l;
}

}  // namespace

std::vector<EdgeData> edge_data(const LatticePolygon& q) {
  require_ldp(q);
  std::vector<EdgeData> out;
  out.reserve(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    EdgeData e;
    e.index = i;
    e.n1 = q.v[i];
    e.n2 = q.at(static_cast<long long>(i) + 1);
    e.type = cone_type(e.n1, e.n2);
    e.local_index = local_index_of(e.type);
    e.hj = hilbert_basis(e.n1, e.n2);
    Point2 w{e.n1.y - e.n2.y, e.n2.x - e.n1.x};
    e.eta = exact_div(w, gcd(w.x, w.y));
    if (dot(e.eta, e.n1) != -e.local_index || dot(e.eta, e.n2) != -e.local_index)
      throw error(errc::internal, "edge normal");
    out.push_back(std::move(e));
  }
  return out;
}

Int ldp_index(const LatticePolygon& q) {
  std::vector<ConeType> types = edge_types(q);
  Int l = 1;
  for (const ConeType& t : types) l = lcm(l, local_index_of(t));
  // Cross-check: l = min{k : Vert(k*polar) integral}.
  Int k = 1;
  for (const RatPoint& w : polar(q).v) k = lcm(k, lcm(w.x.den, w.y.den));
  if (k != l) throw error(errc::internal, "index mismatch with polar dilation");
  return l;
}

std::optional<Int> is_l_reflexive(const LatticePolygon& q) {
  std::vector<ConeType> types;
  try {
    types = edge_types(q);
  } catch (const error& e) {
    if (e.code == errc::not_ldp) return std::nullopt;
    throw;
  }
  Int l = local_index_of(types[0]);
  for (const ConeType& t : types)
    if (local_index_of(t) != l) return std::nullopt;
  if (area2(q) != l * boundary_count(q))
    throw error(errc::internal, "area/boundary relation violated");
  return l;
}

LatticePolygon dual(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  std::vector<Point2> m;
  for (const EdgeData& e : edge_data(q)) m.push_back(e.eta);
  LatticePolygon d = make_polygon(std::move(m));
  if (is_l_reflexive(d) != std::optional<Int>(l))
    throw error(errc::internal, "dual polygon is not l-reflexive");
  return d;
}

std::vector<Wve2cGraph::Triple> combinatorial_triples(const LatticePolygon& q) {
  std::vector<EdgeData> ed = edge_data(q);
  long long nu = static_cast<long long>(ed.size());
  std::vector<Wve2cGraph::Triple> out;
  for (long long i = 0; i < nu; ++i) {
    const EdgeData& prev = ed[static_cast<size_t>((i + nu - 1) % nu)];
    const EdgeData& next = ed[static_cast<size_t>(i)];
    // Neighbors of ray n_i in the resolved fan; for basic cones the Hilbert
    // chain is just (n1, n2), which covers all four defining cases at once.
    Point2 a = prev.hj.u[prev.hj.u.size() - 2];
    Point2 b = next.hj.u[1];
    Point2 s = a + b;
    Point2 n = q.v[static_cast<size_t>(i)];
    Int r = n.x.v != 0 ? exact_div(s.x, n.x) : exact_div(s.y, n.y);
    if (r * n != s) throw error(errc::internal, "r_i not integral");
    out.push_back({r, next.type.p, next.type.q});
  }
  return out;
}

Wve2cGraph wve2c_graph(const LatticePolygon& q) { return {combinatorial_triples(q)}; }

Wve2cGraph reverse(const Wve2cGraph& g) {
  // Traverse clockwise and replace each edge weight p by its socius.
  long long n = static_cast<long long>(g.triples.size());
  std::vector<Wve2cGraph::Triple> out;
  for (long long t = 0; t < n; ++t) {
    const Wve2cGraph::Triple& vtx = g.triples[static_cast<size_t>((n - 1 - t + n) % n)];
    const Wve2cGraph::Triple& edge = g.triples[static_cast<size_t>((n - 2 - t + 2 * n) % n)];
    out.push_back({vtx.r, socius(edge.p, edge.q), edge.q});
  }
  return {out};
}

namespace {

GraphKey min_rotation(const std::vector<Wve2cGraph::Triple>& t) {
  size_t n = t.size();
  GraphKey best;
  for (size_t s = 0; s < n; ++s) {
    GraphKey cand;
    cand.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      const Wve2cGraph::Triple& x = t[(s + i) % n];
      cand.push_back({x.r.v, x.p.v, x.q.v});
    }
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

}  // namespace

GraphKey graph_key(const Wve2cGraph& g) {
  return std::min(min_rotation(g.triples), min_rotation(reverse(g).triples));
}

GraphKey graph_key(const LatticePolygon& q) { return graph_key(wve2c_graph(q)); }

std::string graph_key_string(const GraphKey& k) {
  std::string s;
  for (const auto& t : k) {
    if (!s.empty()) s += ';';
    s += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
  }
  return s;
}

std::string graph_to_dot(const Wve2cGraph& g) {
  std::string s = "digraph wve2c {\n";
  size_t n = g.triples.size();
  for (size_t i = 0; i < n; ++i)
    s += "  v" + std::to_string(i + 1) + " [label=\"" + std::to_string(-g.triples[i].r.v) +
         "\"];\n";
  for (size_t i = 0; i < n; ++i)
    s += "  v" + std::to_string(i + 1) + " -> v" + std::to_string((i + 1) % n + 1) +
         " [label=\"(" + std::to_string(g.triples[i].p.v) + "," +
         std::to_string(g.triples[i].q.v) + ")\"];\n";
  s += "}\n";
  return s;
}

SmoothInvariants smooth_invariants(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  std::vector<EdgeData> ed = edge_data(q);
  Int e = Int(static_cast<long long>(ed.size()));
  for (const EdgeData& d : ed) e += Int(static_cast<long long>(d.hj.b.size()));
  // K^2 of the resolution = K^2 of the surface + sum of local discrepancies;
  // basic cones contribute nothing.
  Rat k2 = Rat(boundary_count(dual(q)), l);
  for (const EdgeData& d : ed) {
    if (d.type.q.v == 1) continue;
    k2 += Rat(d.type.p + d.type.socius - Int(2), d.type.q);
    for (Int b : d.hj.b) k2 -= Rat(b - Int(2));
  }
  if (!k2.is_integer()) throw error(errc::internal, "non-integral smooth K^2");
  return {e, k2.num};
}

K2Result k2_singular(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  Rat via_boundary = Rat(boundary_count(dual(q)), l);
  Rat via_sums = Rat(12) - Rat(Int(static_cast<long long>(q.size())));
  for (const EdgeData& d : edge_data(q))
    via_sums += Rat(2, d.type.q) - Rat(12) * dedekind_sum(d.type.p, d.type.q) - Rat(2);
  return {via_boundary, via_boundary == via_sums};
}

TwelvePoint twelve_point(const LatticePolygon& q) {
  require_reflexive(q);
  Int b = boundary_count(q);
  Int bd = boundary_count(dual(q));
  return {b, bd, b + bd == Int(12)};
}

std::vector<DualConeDatum> dual_cone_data(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  if (l.v == 1) throw error(errc::ell_is_one, "dual_cone_data");
  std::vector<EdgeData> ed = edge_data(q);
  std::vector<Wve2cGraph::Triple> tr = combinatorial_triples(q);
  long long nu = static_cast<long long>(ed.size());
  std::vector<DualConeDatum> out;
  for (long long i = 0; i < nu; ++i) {
    const EdgeData& prev = ed[static_cast<size_t>((i + nu - 1) % nu)];
    const EdgeData& next = ed[static_cast<size_t>(i)];
    Int r = tr[static_cast<size_t>(i)].r;
    // Multiplicity of the dual cone, two ways.
    Rat qs1 = Rat(l * l) * (Rat(1, prev.type.q) + Rat(1, next.type.q) -
                            Rat(det(q.at(i - 1), q.at(i + 1)), prev.type.q * next.type.q));
    Rat qs2 = Rat(l * l) * (Rat(prev.type.q - prev.type.socius + Int(1), prev.type.q) +
                            Rat(next.type.q - next.type.p + Int(1), next.type.q) - Rat(r));
    if (qs1 != qs2 || !qs1.is_integer())
      throw error(errc::internal, "dual multiplicity routes disagree");
    Int qs = qs1.num;
    // p* via the congruence for the auxiliary cone at n_i.
    Int A = exact_div(l * (next.type.p - Int(1)), next.type.q);
    ExtGcd e = gcd_extended(A, l);
    if (e.g.v != 1) throw error(errc::internal, "dual type congruence not solvable");
    Int kappa = e.kappa, lambda = -e.lambda;
    Int T = exact_div(l * ((r - Int(2)) * prev.type.q + prev.type.socius - Int(1)), prev.type.q);
    Int z = mod_euclid(kappa * T + lambda * l, qs);
    if (z.v == 0) throw error(errc::internal, "dual type congruence degenerate");
    Int ps_socius = qs - z;
    Int ps = socius(ps_socius, qs);
    // Must match the direct computation on the dual vertices.
    if (cone_type(prev.eta, next.eta) != ConeType{ps, qs, ps_socius})
      throw error(errc::internal, "dual cone type mismatch");
    out.push_back({qs, ps});
  }
  return out;
}

IdentityReport identities_report(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  std::vector<EdgeData> ed = edge_data(q);
  std::vector<Wve2cGraph::Triple> tr = combinatorial_triples(q);
  long long nu = static_cast<long long>(ed.size());
  IdentityReport rep;

  auto triple_sum = [](const std::vector<EdgeData>& e, const std::vector<Wve2cGraph::Triple>& t) {
    Rat lhs(0), rhs(Int(3 * static_cast<long long>(e.size()) - 12));
    for (const auto& x : t) lhs += Rat(x.r);
    for (const auto& d : e)
      for (Int b : d.hj.b) rhs -= Rat(b - Int(3));
    return lhs == rhs;
  };
  rep["triple_sum"] = triple_sum(ed, tr);

  if (l.v == 1) {
    for (const char* name :
         {"determinant_multiplicity", "determinant_multiplicity_dual", "dedekind_sum",
          "dedekind_sum_dual", "combinatorial_triples", "combinatorial_triples_dual",
          "winding_number"})
      rep[name] = std::nullopt;
    return rep;
  }

  LatticePolygon d = dual(q);
  std::vector<EdgeData> edd = edge_data(d);
  std::vector<Wve2cGraph::Triple> trd = combinatorial_triples(d);

  auto det_identity = [&](const LatticePolygon& poly, const std::vector<EdgeData>& e) {
    long long n = static_cast<long long>(e.size());
    Rat lhs(0), rhs(12);
    for (long long i = 0; i < n; ++i) {
      Int qi = e[static_cast<size_t>(i)].type.q;
      Int qn = e[static_cast<size_t>((i + 1) % n)].type.q;
      lhs += Rat(qi, l) + Rat(Int(2) * l, qi);
      rhs += Rat(l * det(poly.at(i), poly.at(i + 2)), qi * qn);
    }
    return lhs == rhs;
  };
  rep["determinant_multiplicity"] = det_identity(q, ed);
  rep["determinant_multiplicity_dual"] = det_identity(d, edd);

  auto ds_identity = [&](const LatticePolygon& poly, const std::vector<EdgeData>& e) {
    long long n = static_cast<long long>(e.size());
    Rat lhs(0), rhs(Int(12 - 3 * n));
    for (long long i = 0; i < n; ++i) {
      const ConeType& t = e[static_cast<size_t>(i)].type;
      Int qn = e[static_cast<size_t>((i + 1) % n)].type.q;
      lhs += Rat(12) * dedekind_sum(t.p, t.q);
      rhs += Rat(det(poly.at(i), poly.at(i + 2)), t.q * qn);
    }
    return lhs == rhs;
  };
  rep["dedekind_sum"] = ds_identity(q, ed);
  rep["dedekind_sum_dual"] = ds_identity(d, edd);

  auto ct_identity = [&](const std::vector<EdgeData>& e,
                         const std::vector<Wve2cGraph::Triple>& t) {
    long long n = static_cast<long long>(e.size());
    Rat lhs(0), rhs(Rat(12) - Rat(Int(2) * l * Int(n)));
    for (long long i = 0; i < n; ++i) {
      const ConeType& c = e[static_cast<size_t>(i)].type;
      lhs += Rat(c.q, l) + Rat(Int(2) * l, c.q);
      rhs += Rat(l) * (Rat(c.p + c.socius, c.q) + Rat(t[static_cast<size_t>(i)].r));
    }
    return lhs == rhs;
  };
  rep["combinatorial_triples"] = ct_identity(ed, tr);
  rep["combinatorial_triples_dual"] = ct_identity(edd, trd);

  // Winding number of the vertex sequence, from the resolution data; clearing
  // denominators this is an exact identity equal to 12.
  {
    Rat sum(0);
    for (long long i = 0; i < nu; ++i) {
      const EdgeData& prev = ed[static_cast<size_t>((i + nu - 1) % nu)];
      const EdgeData& next = ed[static_cast<size_t>(i)];
      Int si = Int(static_cast<long long>(next.hj.b.size()));
      Rat term = Rat(Int(3) * (si + Int(1)));
      for (Int b : next.hj.b) term -= Rat(b);
      term -= Rat(det(q.at(i - 1), q.at(i + 1)), prev.type.q * next.type.q);
      term -= Rat((next.type.q - next.type.p) + (next.type.q - next.type.socius), next.type.q);
      sum += term;
    }
    rep["winding_number"] = (sum == Rat(12));
  }
  return rep;
}

CharDiffs characteristic_differences(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  if (l.v == 1) return {0, 0};
  LatticePolygon d = dual(q);
  SmoothInvariants s = smooth_invariants(q);
  SmoothInvariants sd = smooth_invariants(d);
  Int bq = boundary_count(q), bd = boundary_count(d);

  Int dd_direct = hull_boundary_count(interior_hull(d));
  Int dd_k2 = bd - s.k2_smooth;
  Int dd_euler = s.euler - bq;
  if (dd_direct != dd_k2 || dd_k2 != dd_euler)
    throw error(errc::internal, "characteristic difference routes disagree (dual side)");

  Int dq_direct = hull_boundary_count(interior_hull(q));
  Int dq_k2 = bq - sd.k2_smooth;
  Int dq_euler = sd.euler - bd;
  if (dq_direct != dq_k2 || dq_k2 != dq_euler)
    throw error(errc::internal, "characteristic difference routes disagree");

  return {dd_direct, dq_direct};
}

Genus sectional_genus(const LatticePolygon& q) {
  Int l = require_reflexive(q);
  LatticePolygon d = dual(q);
  Int bd = boundary_count(d);
  Rat g = Rat(l - Int(1), 2) * Rat(bd) + Rat(1);
  if (!g.is_integer()) throw error(errc::internal, "non-integral genus");
  if (g.num != interior_count(d)) throw error(errc::internal, "genus vs interior count");
  // Mirror property: equal genera on both sides. For l = 1 both genera are 1;
  // for l > 1 this forces the boundary pair (6,6).
  bool tmp = l.v == 1 || (boundary_count(q).v == 6 && bd.v == 6);
  return {g.num, tmp};
}

}  // namespace lrp
