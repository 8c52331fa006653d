#include <doctest.h>

#include <random>
#include <set>

#include "lrp/polygon.hpp"

using namespace lrp;

namespace {

LatticePolygon q1() { return make_polygon({{1, 0}, {0, 1}, {-1, -1}}); }
LatticePolygon q3() { return make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
LatticePolygon q14() { return make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }
LatticePolygon q16() { return make_polygon({{-1, -1}, {2, -1}, {-1, 2}}); }
LatticePolygon unit_triangle() { return make_polygon({{0, 0}, {1, 0}, {0, 1}}); }
LatticePolygon pentagon5() {
  return make_polygon({{3, -10}, {1, 0}, {-1, 5}, {-2, 5}, {-1, 0}});
}

// Independent interior count: strict half-plane tests over the bounding box.
long long brute_interior(const LatticePolygon& p) {
  return static_cast<long long>(interior_lattice_points(p).size());
}

LatticePolygon random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-9, 9);
  std::uniform_int_distribution<int> count(3, 8);
  while (true) {
    std::vector<Point2> pts;
    for (int i = 0, n = count(rng); i < n; ++i) pts.push_back({d(rng), d(rng)});
    try {
      return make_polygon(std::move(pts));
    } catch (const error&) {
    }
  }
}

Mat2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> shear(-3, 3);
  Mat2 u{1, shear(rng), 0, 1};
  u = u * Mat2{1, 0, shear(rng), 1};
  u = u * Mat2{1, shear(rng), 0, 1};
  if (shear(rng) > 0) u = u * Mat2{0, 1, 1, 0};
  return u;
}

}  // namespace

TEST_CASE("make_polygon canonicalization") {
  LatticePolygon t = q1();
  CHECK(t.v == std::vector<Point2>{{-1, -1}, {1, 0}, {0, 1}});

  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {2, 0}}), error);

  LatticePolygon m = make_polygon({{0, 0}, {2, 0}, {1, 0}, {0, 2}});
  CHECK(m.v == std::vector<Point2>{{0, 0}, {2, 0}, {0, 2}});
}

TEST_CASE("area2") {
  CHECK(area2(q1()).v == 3);
  CHECK(area2(unit_triangle()).v == 1);
  CHECK(area2(pentagon5()).v == 35);
}

TEST_CASE("boundary_count") {
  CHECK(boundary_count(q16()).v == 9);
  CHECK(boundary_count(pentagon5()).v == 7);
  CHECK(boundary_count(make_polygon({{3, -13}, {-1, 13}, {-3, 13}, {1, -13}})).v == 8);
}

TEST_CASE("interior_count") {
  CHECK(interior_count(q3()).v == 1);
  CHECK(interior_count(unit_triangle()).v == 0);
  LatticePolygon dual_pentagon = make_polygon({{-5, -1}, {-5, -2}, {0, -1}, {5, 1}, {5, 2}});
  CHECK(interior_count(dual_pentagon).v == 11);
}

TEST_CASE("lattice_points") {
  std::vector<Point2> pts = lattice_points(unit_triangle());
  CHECK(std::set<Point2>(pts.begin(), pts.end()) ==
        std::set<Point2>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(lattice_points(q3()).size() == 5);
  for (long long k = 1; k <= 5; ++k)
    CHECK(static_cast<long long>(lattice_points(dilate(q3(), k)).size()) == 2 * k * k + 2 * k + 1);
}

TEST_CASE("ehrhart coefficients and evaluation") {
  Ehrhart e3 = ehrhart(q3());
  CHECK(e3.c2 == Rat(2));
  CHECK(e3.c1 == Rat(2));
  CHECK(e3.c0 == Rat(1));
  Ehrhart e1 = ehrhart(q1());
  CHECK(e1.c2 == Rat(3, 2));
  CHECK(e1.c1 == Rat(3, 2));
  Ehrhart eu = ehrhart(unit_triangle());
  CHECK(eu.c2 == Rat(1, 2));
  CHECK(eu.c1 == Rat(3, 2));
  CHECK(eu.c0 == Rat(1));
}

TEST_CASE("ehrhart counts dilations and reciprocity, random polygons") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePolygon p = random_polygon(rng);
    Ehrhart e = ehrhart(p);
    for (long long k = 1; k <= 3; ++k) {
      LatticePolygon kp = dilate(p, k);
      CHECK(ehrhart_eval(e, k) == Rat(Int(static_cast<long long>(lattice_points(kp).size()))));
      // Reciprocity: interior count of kP equals the polynomial at -k.
      CHECK(ehrhart_eval(e, -k) == Rat(Int(brute_interior(kp))));
    }
  }
}

TEST_CASE("pick consistency on random polygons") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 500; ++trial) {
    LatticePolygon p = random_polygon(rng);
    Rat count = Rat(area2(p), 2) + Rat(boundary_count(p), 2) + Rat(1);
    CHECK(count == Rat(Int(static_cast<long long>(lattice_points(p).size()))));
    CHECK(interior_count(p).v == brute_interior(p));
  }
}

TEST_CASE("polar examples") {
  RationalPolygon p3 = polar(q3());
  auto l3 = to_lattice(p3);
  REQUIRE(l3.has_value());
  CHECK(*l3 == q14());

  auto l1 = to_lattice(polar(q1()));
  REQUIRE(l1.has_value());
  CHECK(*l1 == q16());

  CHECK_THROWS_AS(polar(unit_triangle()), error);
}

TEST_CASE("polar is an involution on the reflexive representatives") {
  std::vector<LatticePolygon> reps = {
      q1(),
      make_polygon({{1, 0}, {0, 1}, {-2, -1}}),
      q3(),
      make_polygon({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}),
      make_polygon({{1, 0}, {0, 1}, {-1, 1}, {-1, -1}}),
      make_polygon({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
      make_polygon({{1, -1}, {-1, 2}, {-1, -1}}),
      make_polygon({{1, 0}, {-1, 1}, {-1, -1}, {1, -1}}),
      make_polygon({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {1, -1}}),
      make_polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
      make_polygon({{-1, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}}),
      make_polygon({{-1, -1}, {0, -1}, {1, 0}, {-1, 2}}),
      make_polygon({{-1, -1}, {1, -1}, {1, 0}, {-1, 2}}),
      q14(),
      make_polygon({{-1, -1}, {1, -1}, {-1, 3}}),
      q16(),
  };
  for (const LatticePolygon& q : reps) {
    auto polar_q = to_lattice(polar(q));
    REQUIRE(polar_q.has_value());
    auto back = to_lattice(polar(*polar_q));
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("interior_hull") {
  Hull h3 = interior_hull(q3());
  CHECK(h3.kind == Hull::Kind::point);
  CHECK(h3.points == std::vector<Point2>{{0, 0}});
  CHECK(hull_boundary_count(h3).v == 1);

  Hull hp = interior_hull(pentagon5());
  REQUIRE(hp.kind == Hull::Kind::polygon);
  CHECK(hp.points == std::vector<Point2>{{-1, 1}, {0, -2}, {2, -7}, {2, -6}, {1, -1}, {0, 2},
                                         {-1, 4}});
  CHECK(hull_boundary_count(hp).v == 9);
  CHECK(hull_interior_count(hp).v == 6);

  Hull hd = interior_hull(make_polygon({{-5, -1}, {-5, -2}, {0, -1}, {5, 1}, {5, 2}}));
  REQUIRE(hd.kind == Hull::Kind::polygon);
  CHECK(hull_boundary_count(hd).v == 9);
  CHECK(hull_interior_count(hd).v == 2);

  Hull he = interior_hull(unit_triangle());
  CHECK(he.kind == Hull::Kind::empty);
  CHECK(hull_boundary_count(he).v == 0);

  // Horizontal strip with collinear interior points.
  Hull hs = interior_hull(make_polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}}));
  CHECK(hs.kind == Hull::Kind::segment);
  CHECK(hull_boundary_count(hs).v == 3);
}

TEST_CASE("apply_map") {
  CHECK(apply_map(q3(), Mat2::identity()) == q3());

  LatticePolygon q7 = make_polygon({{1, -1}, {-1, 2}, {-1, -1}});
  auto polar7 = to_lattice(polar(q7));
  REQUIRE(polar7.has_value());
  CHECK(apply_map(q7, {2, 1, 1, 1}) == *polar7);

  LatticePolygon qbar7 = make_polygon({{0, 1}, {-3, -2}, {2, 1}});
  CHECK(apply_map(qbar7, {7, 0, 1, 1}) ==
        make_polygon({{0, 1}, {14, 3}, {-21, -5}}));

  CHECK_THROWS_AS(apply_map(q3(), Mat2{1, 2, 2, 4}), error);
}

TEST_CASE("unimodular maps preserve lattice invariants") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    LatticePolygon p = random_polygon(rng);
    Mat2 u = random_unimodular(rng);
    LatticePolygon q = apply_map(p, u);
    CHECK(area2(q) == area2(p));
    CHECK(boundary_count(q) == boundary_count(p));
    CHECK(interior_count(q) == interior_count(p));
    CHECK(hull_boundary_count(interior_hull(q)) == hull_boundary_count(interior_hull(p)));
  }
}

TEST_CASE("text round trip") {
  LatticePolygon p = polygon_from_text("3,-10;1,0;-1,5;-2,5;-1,0");
  CHECK(p == pentagon5());
  CHECK(polygon_from_text(polygon_to_text(p)) == p);
  CHECK_THROWS_AS(polygon_from_text("1,2;3"), error);
  CHECK_THROWS_AS(polygon_from_text("0,0;1,0;2,0"), error);
}
