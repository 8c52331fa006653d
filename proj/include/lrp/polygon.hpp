#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrp/lattice.hpp"

namespace lrp {

// Convex lattice polygon in canonical form: vertices counterclockwise,
// starting at the lexicographically smallest one (x, then y).
struct LatticePolygon {
  std::vector<Point2> v;

  size_t size() const { return v.size(); }
  // Vertex with cyclic index (any integer).
  Point2 at(long long i) const {
    long long n = static_cast<long long>(v.size());
    long long j = ((i % n) + n) % n;
    return v[static_cast<size_t>(j)];
  }
  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

struct RatPoint {
  Rat x, y;
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

struct RationalPolygon {
  std::vector<RatPoint> v;
  friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;
};

struct Hull {
  enum class Kind { empty, point, segment, polygon };
  Kind kind = Kind::empty;
  std::vector<Point2> points;  // canonical polygon vertices, segment endpoints, or the point
};

LatticePolygon make_polygon(std::vector<Point2> points);

// Twice the normalized area (shoelace).
Int area2(const LatticePolygon& p);

Int boundary_count(const LatticePolygon& p);

// Number of interior lattice points, via Pick's formula.
Int interior_count(const LatticePolygon& p);

// All lattice points of the polygon (bounding-box scan).
std::vector<Point2> lattice_points(const LatticePolygon& p);
std::vector<Point2> interior_lattice_points(const LatticePolygon& p);

struct Ehrhart {
  Rat c2, c1, c0;
};

Ehrhart ehrhart(const LatticePolygon& p);
Rat ehrhart_eval(const Ehrhart& e, Int k);

bool origin_interior(const LatticePolygon& p);

// Polar polygon {x : <x,y> >= -1 for all y in P}; origin must be interior.
RationalPolygon polar(const LatticePolygon& p);
RationalPolygon scale(const RationalPolygon& p, Int s);
// Lattice polygon with the same vertices, if they are all integral.
std::optional<LatticePolygon> to_lattice(const RationalPolygon& p);

Hull interior_hull(const LatticePolygon& p);
// Lattice points on the hull boundary: polygon boundary count, point count of
// a segment, 1 for a single point, 0 when empty.
Int hull_boundary_count(const Hull& h);
Int hull_interior_count(const Hull& h);

LatticePolygon apply_map(const LatticePolygon& p, const Mat2& m);
LatticePolygon dilate(const LatticePolygon& p, Int k);

// Text form "x1,y1;x2,y2;..." (canonical order on output, any order on input).
LatticePolygon polygon_from_text(const std::string& text);
std::string polygon_to_text(const LatticePolygon& p);

}  // namespace lrp
