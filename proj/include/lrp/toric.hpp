#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrp/cones.hpp"
#include "lrp/polygon.hpp"

namespace lrp {

// Data of edge i = conv(n_i, n_{i+1}) of an LDP polygon (ccw, indices mod nu).
struct EdgeData {
  size_t index = 0;
  Point2 n1, n2;
  ConeType type;
  Int local_index = 1;
  HJData hj;
  Point2 eta;  // primitive inward normal, <eta, n1> = <eta, n2> = -local_index
};

// Cyclic weighted graph: vertex i carries -r_i, edge i carries (p_i, q_i).
struct Wve2cGraph {
  struct Triple {
    Int r, p, q;
    friend bool operator==(const Triple&, const Triple&) = default;
  };
  std::vector<Triple> triples;
};

using GraphKey = std::vector<std::array<long long, 3>>;

std::vector<EdgeData> edge_data(const LatticePolygon& q);

Int ldp_index(const LatticePolygon& q);

std::optional<Int> is_l_reflexive(const LatticePolygon& q);

// Dual polygon Q* = l*Q° (vertices are the primitive inward edge normals).
LatticePolygon dual(const LatticePolygon& q);

// (p_i, q_i, r_i) with -r_i the self-intersection of the strict transform of
// the invariant curve at ray n_i.
std::vector<Wve2cGraph::Triple> combinatorial_triples(const LatticePolygon& q);

Wve2cGraph wve2c_graph(const LatticePolygon& q);
Wve2cGraph reverse(const Wve2cGraph& g);
// Minimal rotation over the graph and its reverse; equal keys characterize
// unimodular equivalence of LDP polygons.
GraphKey graph_key(const Wve2cGraph& g);
GraphKey graph_key(const LatticePolygon& q);
std::string graph_key_string(const GraphKey& k);
std::string graph_to_dot(const Wve2cGraph& g);

struct SmoothInvariants {
  Int euler;      // e of the minimal desingularization
  Int k2_smooth;  // K^2 of the minimal desingularization
};

SmoothInvariants smooth_invariants(const LatticePolygon& q);

struct K2Result {
  Rat value;          // K^2 of the singular surface
  bool routes_agree;  // boundary-count route vs Dedekind-sum route
};

K2Result k2_singular(const LatticePolygon& q);

struct TwelvePoint {
  Int boundary_q;
  Int boundary_dual;
  bool ok;
};

TwelvePoint twelve_point(const LatticePolygon& q);

struct DualConeDatum {
  Int q_star;
  Int p_star;
};

// Per vertex n_i: the type of the dual cone spanned by (m_{i-1}, m_i),
// computed from the primal data and cross-checked against cone_type on the
// dual vertices. Requires l > 1.
std::vector<DualConeDatum> dual_cone_data(const LatticePolygon& q);

// Identity checks; value is true/false, or unset when skipped for l = 1.
using IdentityReport = std::map<std::string, std::optional<bool>>;

IdentityReport identities_report(const LatticePolygon& q);

struct CharDiffs {
  Int d_dual;  // boundary points of I(Q*)
  Int d_q;     // boundary points of I(Q)
};

CharDiffs characteristic_differences(const LatticePolygon& q);

struct Genus {
  Int value;
  bool tmp;  // topological mirror property: boundary pair (6,6)
};

Genus sectional_genus(const LatticePolygon& q);

}  // namespace lrp
