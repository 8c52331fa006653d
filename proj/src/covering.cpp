#include "lrp/covering.hpp"

namespace lrp {

namespace {

LatticePolygon poly(std::vector<Point2> pts) { return make_polygon(std::move(pts)); }

ReflexiveAtlas build_atlas() {
  ReflexiveAtlas a;
  a.q = {
      poly({{1, 0}, {0, 1}, {-1, -1}}),
      poly({{1, 0}, {0, 1}, {-2, -1}}),
      poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
      poly({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}),
      poly({{1, 0}, {0, 1}, {-1, 1}, {-1, -1}}),
      poly({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
      poly({{1, -1}, {-1, 2}, {-1, -1}}),
      poly({{1, 0}, {-1, 1}, {-1, -1}, {1, -1}}),
      poly({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {1, -1}}),
      poly({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
      poly({{-1, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}}),
      poly({{-1, -1}, {0, -1}, {1, 0}, {-1, 2}}),
      poly({{-1, -1}, {1, -1}, {1, 0}, {-1, 2}}),
      poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}),
      poly({{-1, -1}, {1, -1}, {-1, 3}}),
      poly({{-1, -1}, {2, -1}, {-1, 2}}),
  };
  a.qbar = {
      poly({{0, 1}, {-1, -2}, {1, 1}}),
      poly({{0, 1}, {-1, -1}, {2, 1}}),
      poly({{0, 1}, {-1, -1}, {0, -1}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {0, -1}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {-1, -2}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 1}}),
      poly({{0, 1}, {-3, -2}, {2, 1}}),
      poly({{0, 1}, {-2, -1}, {0, -1}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {-1, -1}, {1, -1}, {1, 1}}),
      poly({{0, 1}, {-1, 0}, {1, -2}, {1, 1}}),
      poly({{0, 1}, {-2, -1}, {1, -1}, {1, 1}}),
      poly({{0, 1}, {-2, -1}, {0, -1}, {2, 1}}),
      poly({{0, 1}, {-2, -1}, {4, 1}}),
      poly({{0, 1}, {-3, -2}, {3, 1}}),
  };
  for (size_t i = 0; i < 16; ++i) {
    a.keys.push_back(graph_key(a.q[i]));
    if (graph_key(a.qbar[i]) != a.keys[i])
      throw error(errc::internal, "atlas representatives disagree");
  }
  return a;
}

std::vector<Point2> boundary_points(const LatticePolygon& q) {
  std::vector<Point2> pts;
  for (size_t i = 0; i < q.size(); ++i) {
    Point2 a = q.v[i], b = q.at(static_cast<long long>(i) + 1);
    Point2 e = b - a;
    Int g = gcd(e.x, e.y);
    Point2 step = exact_div(e, g);
    for (long long t = 0; t < g.v; ++t) pts.push_back(a + Int(t) * step);
  }
  return pts;
}

}  // namespace

const ReflexiveAtlas& ReflexiveAtlas::instance() {
  static const ReflexiveAtlas a = build_atlas();
  return a;
}

Mat2 boundary_sublattice(const LatticePolygon& q) {
  Int l = [&] {
    std::optional<Int> v = is_l_reflexive(q);
    if (!v) throw error(errc::not_l_reflexive, "boundary_sublattice");
    return *v;
  }();
  Mat2 b = lattice_from_points(boundary_points(q));
  if (sublattice_index(b) != l) throw error(errc::internal, "boundary sublattice index != l");
  return b;
}

Reduction reduce_to_reflexive(const LatticePolygon& q) {
  Mat2 b = boundary_sublattice(q);
  std::vector<Point2> v;
  for (Point2 p : q.v) {
    std::optional<std::pair<Int, Int>> st = in_sublattice(p, b);
    if (!st) throw error(errc::internal, "vertex outside boundary sublattice");
    v.push_back({st->first, st->second});
  }
  LatticePolygon p1 = make_polygon(std::move(v));
  if (is_l_reflexive(p1) != std::optional<Int>(Int(1)))
    throw error(errc::internal, "reduction is not reflexive");
  GraphKey key = graph_key(p1);
  const ReflexiveAtlas& atlas = ReflexiveAtlas::instance();
  for (int j = 0; j < 16; ++j)
    if (atlas.keys[static_cast<size_t>(j)] == key) return {p1, j + 1};
  throw error(errc::internal, "reduction matches no reflexive class");
}

std::optional<Mat2> find_unimodular_map(const LatticePolygon& p, const LatticePolygon& p2) {
  if (p.size() != p2.size()) return std::nullopt;
  long long n = static_cast<long long>(p.size());
  Mat2 v = Mat2::from_columns(p.v[0], p.v[1]);
  Int dv = v.det();
  if (dv.v == 0) throw error(errc::internal, "find_unimodular_map: dependent vertex pair");
  // Map the first vertex pair of p onto every ordered pair of consecutive
  // vertices of p2, in both orientations.
  for (long long s = 0; s < n; ++s) {
    for (int dir : {1, -1}) {
      Mat2 w = Mat2::from_columns(p2.at(s), p2.at(s + dir));
      // U = w * v^{-1}, integral iff dv divides every entry of w * adj(v).
      Mat2 adj{v.d, -v.b, -v.c, v.a};
      Mat2 num = w * adj;
      if (num.a.v % dv.v || num.b.v % dv.v || num.c.v % dv.v || num.d.v % dv.v) continue;
      Mat2 u{Int(num.a.v / dv.v), Int(num.b.v / dv.v), Int(num.c.v / dv.v), Int(num.d.v / dv.v)};
      if (abs(u.det()).v != 1) continue;
      if (apply_map(p, u) == p2) return u;
    }
  }
  return std::nullopt;
}

CoverDecomposition cover_decomposition(const LatticePolygon& q) {
  Int l = [&] {
    std::optional<Int> v = is_l_reflexive(q);
    if (!v) throw error(errc::not_l_reflexive, "cover_decomposition");
    return *v;
  }();
  Reduction red = reduce_to_reflexive(q);
  const LatticePolygon& qbar = ReflexiveAtlas::instance().qbar[static_cast<size_t>(red.j - 1)];
  GraphKey key = graph_key(q);
  if (l.v == 1) {
    std::optional<Mat2> u = find_unimodular_map(qbar, q);
    if (!u) throw error(errc::no_decomposition, "no unimodular map onto representative");
    return {red.j, 0, *u, *u};
  }
  for (long long k = 1; k < l.v; ++k) {
    if (gcd(Int(k), l).v != 1) continue;
    Mat2 a = shear_matrix(l, Int(k));
    LatticePolygon cand = apply_map(qbar, a);
    if (is_l_reflexive(cand) != std::optional<Int>(l)) continue;
    if (graph_key(cand) != key) continue;
    std::optional<Mat2> u = find_unimodular_map(cand, q);
    if (!u) throw error(errc::internal, "equal keys but no unimodular map");
    Mat2 basis_lambda = *u * a;
    if (lattice_from_points({basis_lambda.col1(), basis_lambda.col2()}) != boundary_sublattice(q))
      throw error(errc::internal, "cover basis does not span the boundary sublattice");
    return {red.j, Int(k), *u, basis_lambda};
  }
  throw error(errc::no_decomposition, "no shear parameter found");
}

std::vector<FiberType> fiber_singularity_types(const LatticePolygon& q) {
  Int l = [&] {
    std::optional<Int> v = is_l_reflexive(q);
    if (!v) throw error(errc::not_l_reflexive, "fiber_singularity_types");
    return *v;
  }();
  std::vector<FiberType> out;
  for (const EdgeData& e : edge_data(q)) {
    Int m = exact_div(e.type.q, l);
    if (m.v == 1) {
      out.push_back({true, 0});
    } else {
      if (m.v < 2 || m.v > 4) throw error(errc::internal, "fiber multiplicity out of range");
      out.push_back({false, m});
    }
  }
  return out;
}

}  // namespace lrp
