#include "lrp/cones.hpp"

namespace lrp {

ConeType cone_type(Point2 n1, Point2 n2) {
  if (!is_primitive(n1) || !is_primitive(n2))
    throw error(errc::nonprimitive_generator, "cone_type");
  Int d = det(n1, n2);
  if (d.v == 0) throw error(errc::collinear_generators, "cone_type");
  Int q = abs(d);
  // kappa*n1.x - lambda*n1.y = 1; then p = kappa*n2.x - lambda*n2.y mod q.
  ExtGcd e = gcd_extended(n1.x, n1.y);
  Int p = mod_euclid(e.kappa * n2.x + e.lambda * n2.y, q);
  if (gcd(p, q).v != 1) throw error(errc::internal, "cone_type: gcd(p,q) != 1");
  return {p, q, socius(p, q)};
}

Int socius(Int p, Int q) {
  if (q.v < 1 || p.v < 0 || p >= q || (q.v > 1 && gcd(p, q).v != 1))
    throw error(errc::not_coprime, "socius");
  if (q.v == 1) return 0;
  ExtGcd e = gcd_extended(p, q);
  return mod_euclid(e.kappa, q);
}

ConeType dual_type(const ConeType& t) {
  if (t.q.v == 1) return {0, 1, 0};
  Int p = t.q - t.p;
  return {p, t.q, socius(p, t.q)};
}

std::vector<Int> hj_expansion(Int a, Int c) {
  if (c.v < 1 || a <= c || gcd(a, c).v != 1) throw error(errc::bad_fraction, "hj_expansion");
  std::vector<Int> b;
  while (true) {
    Int q = ceil_div(a, c);
    b.push_back(q);
    Int r = q * c - a;  // 0 <= r < c
    if (r.v == 0) break;
    a = c;
    c = r;
  }
  return b;
}

std::vector<Int> regular_cf(Int a, Int c) {
  if (c.v < 1 || a <= c || gcd(a, c).v != 1) throw error(errc::bad_fraction, "regular_cf");
  std::vector<Int> d;
  while (c.v != 0) {
    d.push_back(floor_div(a, c));
    Int r = a - d.back() * c;
    a = c;
    c = r;
  }
  return d;
}

HJData hilbert_basis(Point2 n1, Point2 n2) {
  ConeType t = cone_type(n1, n2);
  HJData h;
  if (t.q.v == 1) {
    h.u = {n1, n2};
    return h;
  }
  h.b = hj_expansion(t.q, t.q - t.p);
  h.u.push_back(n1);
  h.u.push_back(exact_div((t.q - t.p) * n1 + n2, t.q));
  for (size_t j = 0; j < h.b.size(); ++j) h.u.push_back(h.b[j] * h.u[j + 1] - h.u[j]);
  if (h.u.back() != n2) throw error(errc::internal, "hilbert_basis: chain end");
  if (h.u[h.b.size()] != exact_div(n1 + (t.q - t.socius) * n2, t.q))
    throw error(errc::internal, "hilbert_basis: penultimate point");
  return h;
}

Rat dedekind_sum(Int p, Int q) {
  if (q.v < 1 || p.v < 0 || p >= q || (q.v > 1 && gcd(p, q).v != 1))
    throw error(errc::not_coprime, "dedekind_sum");
  auto saw = [](Int n, Int q_) {
    if (n.v % q_.v == 0) return Rat(0);
    return Rat(mod_euclid(n, q_), q_) - Rat(1, 2);
  };
  Rat s(0);
  for (long long i = 1; i < q.v; ++i) s += saw(Int(i), q) * saw(p * Int(i), q);
  return s;
}

}  // namespace lrp
