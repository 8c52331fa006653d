#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrp/numeric.hpp"

namespace lrp {

struct Point2 {
  Int x = 0;
  Int y = 0;
  constexpr Point2() = default;
  constexpr Point2(Int px, Int py) : x(px), y(py) {}

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(Int s, Point2 p) { return {s * p.x, s * p.y}; }
  Point2 operator-() const { return {-x, -y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
  friend std::strong_ordering operator<=>(Point2 a, Point2 b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

// det(a, b) of the 2x2 matrix with columns a, b.
inline Int det(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Int dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline Point2 exact_div(Point2 p, Int d) { return {exact_div(p.x, d), exact_div(p.y, d)}; }

// Row-major 2x2 integer matrix; columns (a,c) and (b,d) act as basis vectors.
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;
  constexpr Mat2() = default;
  constexpr Mat2(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {}

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 from_columns(Point2 c1, Point2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }

  Int det() const { return a * d - b * c; }
  Point2 col1() const { return {a, c}; }
  Point2 col2() const { return {b, d}; }
  Point2 apply(Point2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

struct ExtGcd {
  Int g;       // gcd(|a|, |b|) >= 0
  Int kappa;   // kappa*a + lambda*b = g
  Int lambda;
};

// Extended Euclid; gcd(0,0) = 0 with both coefficients 0.
ExtGcd gcd_extended(Int a, Int b);

bool is_primitive(Point2 p);

struct HnfResult {
  Mat2 H;  // lower-triangular, positive diagonal, 0 <= H.c < H.a
  Mat2 U;  // unimodular with U*M = H
};

HnfResult hermite_normal_form(const Mat2& M);

// |det(basis)| = index of the column lattice in Z^2.
Int sublattice_index(const Mat2& basis);

// Integer coordinates of p in the column basis, if they exist.
std::optional<std::pair<Int, Int>> in_sublattice(Point2 p, const Mat2& basis);

// Canonical basis of the sublattice generated by a set of points. Requires
// rank 2; returns columns (a,0), (c,d) with a,d > 0 and 0 <= c < d.
Mat2 lattice_from_points(const std::vector<Point2>& points);

}  // namespace lrp
