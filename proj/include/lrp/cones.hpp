#pragma once

#include <vector>

#include "lrp/lattice.hpp"

namespace lrp {

// Type (p,q) of a two-dimensional lattice cone, 0 <= p < q, gcd(p,q) = 1,
// together with the socius p^ (inverse of p mod q; 0 when q = 1).
struct ConeType {
  Int p = 0;
  Int q = 1;
  Int socius = 0;
  friend bool operator==(const ConeType&, const ConeType&) = default;
};

// Negative-regular continued fraction data of a cone: entries b_1..b_s (all
// >= 2) of q/(q-p), and the Hilbert basis chain u_0..u_{s+1} running from the
// first minimal generator to the second.
struct HJData {
  std::vector<Int> b;
  std::vector<Point2> u;
};

ConeType cone_type(Point2 n1, Point2 n2);

Int socius(Int p, Int q);

ConeType dual_type(const ConeType& t);

// q/(q-p) = [[b_1,...,b_s]] for a/c with a > c >= 1, gcd(a,c) = 1.
std::vector<Int> hj_expansion(Int a, Int c);

// Ordinary continued fraction [d_1,...,d_r] of a/c, last entry >= 2.
std::vector<Int> regular_cf(Int a, Int c);

HJData hilbert_basis(Point2 n1, Point2 n2);

// DS(p,q) by direct sawtooth summation.
Rat dedekind_sum(Int p, Int q);

}  // namespace lrp
