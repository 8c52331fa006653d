#include <doctest.h>

#include "lrp/covering.hpp"

using namespace lrp;

namespace {

LatticePolygon triangle7() { return make_polygon({{0, 1}, {14, 3}, {-21, -5}}); }
LatticePolygon pentagon5() {
  return make_polygon({{3, -10}, {1, 0}, {-1, 5}, {-2, 5}, {-1, 0}});
}
LatticePolygon hexagon(long long ell) {
  return make_polygon({{1, 0}, {-1, ell}, {-2, ell}, {-1, 0}, {1, -ell}, {2, -ell}});
}

}  // namespace

TEST_CASE("atlas") {
  const ReflexiveAtlas& a = ReflexiveAtlas::instance();
  REQUIRE(a.q.size() == 16);
  REQUIRE(a.qbar.size() == 16);
  for (size_t i = 0; i < 16; ++i) {
    CHECK(is_l_reflexive(a.q[i]) == std::optional<Int>(Int(1)));
    CHECK(graph_key(a.qbar[i]) == a.keys[i]);
    // Normalized representatives share the vertex (0,1).
    bool has01 = false;
    for (Point2 p : a.qbar[i].v) has01 = has01 || p == Point2{0, 1};
    CHECK(has01);
  }
  // Polar pairing of the normalized representatives.
  for (size_t j = 0; j < 6; ++j) {
    auto p = to_lattice(polar(a.qbar[j]));
    REQUIRE(p.has_value());
    CHECK(graph_key(*p) == a.keys[16 - j - 1]);
  }
  for (size_t j = 6; j < 10; ++j) {
    auto p = to_lattice(polar(a.qbar[j]));
    REQUIRE(p.has_value());
    CHECK(graph_key(*p) == a.keys[j]);
  }
}

TEST_CASE("boundary sublattice") {
  for (size_t i = 0; i < 16; ++i)
    CHECK(boundary_sublattice(ReflexiveAtlas::instance().q[i]) == Mat2::identity());
  Mat2 b7 = boundary_sublattice(triangle7());
  CHECK(b7 == Mat2{7, 0, 0, 1});
  CHECK(sublattice_index(b7).v == 7);
  CHECK(sublattice_index(boundary_sublattice(pentagon5())).v == 5);
  CHECK_THROWS_AS(boundary_sublattice(make_polygon({{1, 0}, {-1, 5}, {-1, -1}})), error);
}

TEST_CASE("reduction to a reflexive polygon") {
  Reduction r7 = reduce_to_reflexive(triangle7());
  CHECK(r7.j == 7);
  CHECK(is_l_reflexive(r7.p1) == std::optional<Int>(Int(1)));

  for (int j = 1; j <= 16; ++j) {
    const LatticePolygon& qbar = ReflexiveAtlas::instance().qbar[static_cast<size_t>(j - 1)];
    Reduction r = reduce_to_reflexive(qbar);
    CHECK(r.j == j);
    CHECK(r.p1 == qbar);
  }

  CHECK(reduce_to_reflexive(hexagon(9)).j == 10);
}

TEST_CASE("cover decomposition") {
  CoverDecomposition c7 = cover_decomposition(triangle7());
  CHECK(c7.j == 7);
  CHECK(c7.k.v == 1);
  CHECK(abs(c7.basis_n.det()).v == 1);
  CHECK(abs(c7.basis_lambda.det()).v == 7);
  // The decomposition reproduces the polygon on the nose.
  const LatticePolygon& qbar7 = ReflexiveAtlas::instance().qbar[6];
  CHECK(apply_map(qbar7, c7.basis_lambda) == triangle7());

  for (int j = 1; j <= 16; ++j) {
    CoverDecomposition c = cover_decomposition(ReflexiveAtlas::instance().q[static_cast<size_t>(j - 1)]);
    CHECK(c.j == j);
    CHECK(c.k.v == 0);
  }

  CoverDecomposition c3 = cover_decomposition(hexagon(3));
  CHECK(c3.j == 10);
  CHECK(gcd(c3.k, Int(3)).v == 1);
  CHECK(c3.k.v >= 1);
  CHECK(c3.k.v <= 2);
}

TEST_CASE("fiber singularity types") {
  std::vector<FiberType> f7 = fiber_singularity_types(triangle7());
  // Canonical edge order carries cone types (5,7), (5,14), (16,21).
  REQUIRE(f7.size() == 3);
  CHECK(f7[0].smooth);
  CHECK_FALSE(f7[1].smooth);
  CHECK(f7[1].m.v == 2);
  CHECK_FALSE(f7[2].smooth);
  CHECK(f7[2].m.v == 3);

  std::vector<FiberType> fp = fiber_singularity_types(pentagon5());
  int smooth = 0, type2 = 0;
  for (const FiberType& f : fp) {
    if (f.smooth)
      ++smooth;
    else if (f.m.v == 2)
      ++type2;
  }
  CHECK(smooth == 3);
  CHECK(type2 == 2);

  // For reflexive polygons the cover is trivial: type (1, q_i) on every
  // non-basic cone.
  const LatticePolygon& q16 = ReflexiveAtlas::instance().q[15];
  std::vector<EdgeData> ed = edge_data(q16);
  std::vector<FiberType> f16 = fiber_singularity_types(q16);
  for (size_t i = 0; i < ed.size(); ++i) {
    if (ed[i].type.q.v == 1)
      CHECK(f16[i].smooth);
    else
      CHECK(f16[i].m == ed[i].type.q);
  }
}

TEST_CASE("find_unimodular_map") {
  LatticePolygon p = pentagon5();
  Mat2 u{2, 1, 1, 1};
  LatticePolygon q = apply_map(p, u);
  std::optional<Mat2> found = find_unimodular_map(p, q);
  REQUIRE(found.has_value());
  CHECK(apply_map(p, *found) == q);
  CHECK_FALSE(find_unimodular_map(p, triangle7()).has_value());
}
