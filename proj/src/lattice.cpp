#include "lrp/lattice.hpp"

namespace lrp {

const char* errc_name(errc c) {
  switch (c) {
    case errc::overflow: return "OVERFLOW";
    case errc::singular_matrix: return "SINGULAR_MATRIX";
    case errc::degenerate_hull: return "DEGENERATE_HULL";
    case errc::origin_not_interior: return "ORIGIN_NOT_INTERIOR";
    case errc::not_ldp: return "NOT_LDP";
    case errc::not_l_reflexive: return "NOT_L_REFLEXIVE";
    case errc::not_coprime: return "NOT_COPRIME";
    case errc::bad_fraction: return "BAD_FRACTION";
    case errc::ell_is_one: return "ELL_IS_ONE";
    case errc::nonprimitive_generator: return "NONPRIMITIVE_GENERATOR";
    case errc::collinear_generators: return "COLLINEAR_GENERATORS";
    case errc::no_decomposition: return "NO_DECOMPOSITION";
    case errc::restriction_violated: return "RESTRICTION_VIOLATED";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

ExtGcd gcd_extended(Int a, Int b) {
  if (a.v == 0 && b.v == 0) return {0, 0, 0};
  // Invariants: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1.v != 0) {
    Int q = Int(r0.v / r1.v);
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1; t1 = t2;
  }
  if (r0.v < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

bool is_primitive(Point2 p) {
  if (p.x.v == 0 && p.y.v == 0) return false;
  return gcd(p.x, p.y).v == 1;
}

HnfResult hermite_normal_form(const Mat2& M) {
  if (M.det().v == 0) throw error(errc::singular_matrix, "hermite_normal_form");
  // Pick the unimodular row pair annihilating the (1,2) entry.
  Int g = gcd(M.b, M.d);
  Int u11, u12;
  if (g.v == 0) {
    u11 = 1;
    u12 = 0;
  } else {
    u11 = exact_div(M.d, g);
    u12 = -exact_div(M.b, g);
  }
  ExtGcd e = gcd_extended(u11, u12);
  // e.g == 1 since u11, u12 are coprime by construction.
  Mat2 U{u11, u12, -e.lambda, e.kappa};
  Mat2 H = U * M;
  if (H.a.v < 0) {
    U = Mat2{-1, 0, 0, 1} * U;
    H = U * M;
  }
  if (H.d.v < 0) {
    U = Mat2{1, 0, 0, -1} * U;
    H = U * M;
  }
  Int q = floor_div(H.c, H.a);
  U = Mat2{1, 0, -q, 1} * U;
  H = U * M;
  if (H.b.v != 0 || H.a.v <= 0 || H.d.v <= 0 || H.c.v < 0 || H.c >= H.a)
    throw error(errc::internal, "hermite_normal_form shape");
  return {H, U};
}

Int sublattice_index(const Mat2& basis) {
  Int d = basis.det();
  if (d.v == 0) throw error(errc::singular_matrix, "sublattice_index");
  return abs(d);
}

std::optional<std::pair<Int, Int>> in_sublattice(Point2 p, const Mat2& basis) {
  Int d = basis.det();
  if (d.v == 0) throw error(errc::singular_matrix, "in_sublattice");
  // Cramer's rule; integral iff both determinants are divisible by det.
  Int sn = p.x * basis.d - p.y * basis.b;
  Int tn = basis.a * p.y - basis.c * p.x;
  if (sn.v % d.v != 0 || tn.v % d.v != 0) return std::nullopt;
  return std::make_pair(Int(sn.v / d.v), Int(tn.v / d.v));
}

Mat2 lattice_from_points(const std::vector<Point2>& points) {
  // First column: gcd of the x-coordinates, realized as a lattice member.
  Point2 c{0, 0};
  for (Point2 p : points) {
    if (p.x.v == 0) continue;
    if (c.x.v == 0) {
      c = p;
      continue;
    }
    ExtGcd e = gcd_extended(c.x, p.x);
    c = e.kappa * c + e.lambda * p;
  }
  if (c.x.v == 0) throw error(errc::internal, "lattice_from_points: rank < 2");
  if (c.x.v < 0) c = -c;
  // Second column: gcd of the y-coordinates after clearing x.
  Int d = 0;
  for (Point2 p : points) {
    Point2 r = p - exact_div(p.x, c.x) * c;  // x-coordinates share the gcd c.x
    d = gcd(d, r.y);
  }
  if (d.v == 0) throw error(errc::internal, "lattice_from_points: rank < 2");
  c.y = mod_euclid(c.y, d);
  return Mat2::from_columns(c, Point2{0, d});
}

}  // namespace lrp
