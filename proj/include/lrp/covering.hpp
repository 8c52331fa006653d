#pragma once

#include "lrp/toric.hpp"

namespace lrp {

// The sixteen reflexive classes: the classical representatives Q_1..Q_16 and
// the normalized representatives with (0,1) as a common vertex that drive the
// covering construction.
struct ReflexiveAtlas {
  std::vector<LatticePolygon> q;     // Q_1..Q_16 (index 0 = Q_1)
  std::vector<LatticePolygon> qbar;  // normalized representatives
  std::vector<GraphKey> keys;        // graph keys, shared by q[i] and qbar[i]

  static const ReflexiveAtlas& instance();
};

struct CoverDecomposition {
  int j = 0;  // reflexive class, 1..16
  Int k = 0;  // shear parameter, gcd(k, l) = 1; 0 iff l = 1
  Mat2 basis_n;       // unimodular B* with Q = B* . A_{l,k} . Qbar_j
  Mat2 basis_lambda;  // B* . A_{l,k}; columns span the boundary sublattice
};

inline Mat2 shear_matrix(Int l, Int k) { return {l, 0, k, 1}; }

// Canonical basis of the sublattice generated by the boundary lattice points;
// its index equals the reflexivity index.
Mat2 boundary_sublattice(const LatticePolygon& q);

struct Reduction {
  LatticePolygon p1;  // q rewritten in boundary-sublattice coordinates
  int j = 0;          // its reflexive class, 1..16
};

Reduction reduce_to_reflexive(const LatticePolygon& q);

CoverDecomposition cover_decomposition(const LatticePolygon& q);

// Unimodular U with U(p) = p2, if the polygons are equivalent.
std::optional<Mat2> find_unimodular_map(const LatticePolygon& p, const LatticePolygon& p2);

struct FiberType {
  bool smooth = true;
  Int m = 0;  // singularity type (1, m) when not smooth
};

// Per edge: the singularity of the covering surface over that edge's cone.
std::vector<FiberType> fiber_singularity_types(const LatticePolygon& q);

}  // namespace lrp
