#include "lrp/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace lrp {

namespace {

Int cross(Point2 o, Point2 a, Point2 b) { return det(a - o, b - o); }

// Monotone chain with strict turns; returns ccw hull starting at the
// lexicographic minimum, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 3) return {};
  std::vector<Point2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).v <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]).v <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

LatticePolygon make_polygon(std::vector<Point2> points) {
  std::vector<Point2> h = convex_hull(std::move(points));
  if (h.size() < 3) throw error(errc::degenerate_hull, "make_polygon");
  return LatticePolygon{std::move(h)};
}

Int area2(const LatticePolygon& p) {
  Int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += det(p.v[i], p.at(static_cast<long long>(i) + 1));
  return s;  // positive for ccw order
}

Int boundary_count(const LatticePolygon& p) {
  Int s = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    Point2 e = p.at(static_cast<long long>(i) + 1) - p.v[i];
    s += gcd(e.x, e.y);
  }
  return s;
}

Int interior_count(const LatticePolygon& p) {
  // Pick: #int = area - boundary/2 + 1 = (area2 - boundary)/2 + 1.
  return exact_div(area2(p) - boundary_count(p), 2) + 1;
}

std::vector<Point2> lattice_points(const LatticePolygon& p) {
  Int xmin = p.v[0].x, xmax = p.v[0].x, ymin = p.v[0].y, ymax = p.v[0].y;
  for (Point2 q : p.v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  std::vector<Point2> out;
  for (long long x = xmin.v; x <= xmax.v; ++x)
    for (long long y = ymin.v; y <= ymax.v; ++y) {
      Point2 q{x, y};
      bool inside = true;
      for (size_t i = 0; i < p.size() && inside; ++i)
        inside = cross(p.v[i], p.at(static_cast<long long>(i) + 1), q).v >= 0;
      if (inside) out.push_back(q);
    }
  return out;
}

std::vector<Point2> interior_lattice_points(const LatticePolygon& p) {
  std::vector<Point2> out;
  for (Point2 q : lattice_points(p)) {
    bool strict = true;
    for (size_t i = 0; i < p.size() && strict; ++i)
      strict = cross(p.v[i], p.at(static_cast<long long>(i) + 1), q).v > 0;
    if (strict) out.push_back(q);
  }
  return out;
}

Ehrhart ehrhart(const LatticePolygon& p) {
  return {Rat(area2(p), 2), Rat(boundary_count(p), 2), Rat(1)};
}

Rat ehrhart_eval(const Ehrhart& e, Int k) { return e.c2 * Rat(k * k) + e.c1 * Rat(k) + e.c0; }

bool origin_interior(const LatticePolygon& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (det(p.v[i], p.at(static_cast<long long>(i) + 1)).v <= 0) return false;
  return true;
}

namespace {

bool rat_point_less(const RatPoint& a, const RatPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

RationalPolygon canonicalize_rational(std::vector<RatPoint> v) {
  size_t start = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (rat_point_less(v[i], v[start])) start = i;
  std::rotate(v.begin(), v.begin() + static_cast<long long>(start), v.end());
  return RationalPolygon{std::move(v)};
}

}  // namespace

RationalPolygon polar(const LatticePolygon& p) {
  if (!origin_interior(p)) throw error(errc::origin_not_interior, "polar");
  std::vector<RatPoint> w;
  for (size_t i = 0; i < p.size(); ++i) {
    Point2 a = p.v[i], b = p.at(static_cast<long long>(i) + 1);
    Int d = det(a, b);
    // <x, a> = <x, b> = -1 has the unique solution below.
    w.push_back({Rat(a.y - b.y, d), Rat(b.x - a.x, d)});
  }
  return canonicalize_rational(std::move(w));
}

RationalPolygon scale(const RationalPolygon& p, Int s) {
  RationalPolygon q = p;
  for (RatPoint& pt : q.v) {
    pt.x = pt.x * Rat(s);
    pt.y = pt.y * Rat(s);
  }
  return q;
}

std::optional<LatticePolygon> to_lattice(const RationalPolygon& p) {
  std::vector<Point2> v;
  for (const RatPoint& pt : p.v) {
    if (!pt.x.is_integer() || !pt.y.is_integer()) return std::nullopt;
    v.push_back({pt.x.num, pt.y.num});
  }
  return make_polygon(std::move(v));
}

Hull interior_hull(const LatticePolygon& p) {
  std::vector<Point2> pts = interior_lattice_points(p);
  if (pts.empty()) return {Hull::Kind::empty, {}};
  if (pts.size() == 1) return {Hull::Kind::point, pts};
  std::sort(pts.begin(), pts.end());
  bool collinear = true;
  for (size_t i = 2; i < pts.size() && collinear; ++i)
    collinear = cross(pts[0], pts[1], pts[i]).v == 0;
  if (collinear) return {Hull::Kind::segment, {pts.front(), pts.back()}};
  LatticePolygon h = make_polygon(std::move(pts));
  return {Hull::Kind::polygon, h.v};
}

Int hull_boundary_count(const Hull& h) {
  switch (h.kind) {
    case Hull::Kind::empty: return 0;
    case Hull::Kind::point: return 1;
    case Hull::Kind::segment: {
      Point2 e = h.points[1] - h.points[0];
      return gcd(e.x, e.y) + 1;
    }
    case Hull::Kind::polygon: return boundary_count(LatticePolygon{h.points});
  }
  throw error(errc::internal, "hull_boundary_count");
}

Int hull_interior_count(const Hull& h) {
  if (h.kind != Hull::Kind::polygon) return 0;
  return interior_count(LatticePolygon{h.points});
}

LatticePolygon apply_map(const LatticePolygon& p, const Mat2& m) {
  if (m.det().v == 0) throw error(errc::singular_matrix, "apply_map");
  std::vector<Point2> v;
  v.reserve(p.size());
  for (Point2 q : p.v) v.push_back(m.apply(q));
  return make_polygon(std::move(v));
}

LatticePolygon dilate(const LatticePolygon& p, Int k) {
  std::vector<Point2> v;
  for (Point2 q : p.v) v.push_back(k * q);
  return make_polygon(std::move(v));
}

LatticePolygon polygon_from_text(const std::string& text) {
  std::vector<Point2> pts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    size_t comma = part.find(',');
    if (comma == std::string::npos) throw error(errc::parse_error, "expected 'x,y' pair");
    try {
      size_t ax = 0, ay = 0;
      long long x = std::stoll(part.substr(0, comma), &ax);
      long long y = std::stoll(part.substr(comma + 1), &ay);
      pts.push_back({x, y});
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad integer in '" + part + "'");
    }
  }
  if (pts.size() < 3) throw error(errc::parse_error, "need at least 3 vertices");
  return make_polygon(std::move(pts));
}

std::string polygon_to_text(const LatticePolygon& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(p.v[i].x.v) + "," + std::to_string(p.v[i].y.v);
  }
  return out;
}

}  // namespace lrp
