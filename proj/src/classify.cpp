#include "lrp/classify.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrp {

namespace {

struct Candidate {
  GraphKey key;
  int j;
  long long k;
  LatticePolygon poly;
};

std::optional<Candidate> evaluate_candidate(Int ell, int j, long long k) {
  const LatticePolygon& qbar = ReflexiveAtlas::instance().qbar[static_cast<size_t>(j - 1)];
  LatticePolygon cand = ell.v == 1 ? qbar : apply_map(qbar, shear_matrix(ell, Int(k)));
  if (is_l_reflexive(cand) != std::optional<Int>(ell)) return std::nullopt;
  return Candidate{graph_key(cand), j, k, std::move(cand)};
}

ClassTable finish_table(Int ell, std::vector<Candidate> found) {
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
  ClassTable table{ell, {}};
  for (Candidate& c : found) {
    if (!table.classes.empty() && table.classes.back().key == c.key) continue;
    ClassEntry e;
    e.key = std::move(c.key);
    e.rep = std::move(c.poly);
    e.nu = static_cast<int>(e.rep.size());
    e.boundary_q = boundary_count(e.rep);
    e.boundary_dual = boundary_count(dual(e.rep));
    Genus g = sectional_genus(e.rep);
    e.genus = g.value;
    e.tmp = g.tmp;
    e.j = c.j;
    e.k = Int(c.k);
    table.classes.push_back(std::move(e));
  }
  return table;
}

std::vector<long long> shear_parameters(Int ell) {
  if (ell.v == 1) return {0};
  std::vector<long long> ks;
  for (long long k = 1; k < ell.v; ++k)
    if (gcd(Int(k), ell).v == 1) ks.push_back(k);
  return ks;
}

}  // namespace

ClassTable enumerate_l_reflexive_serial(Int ell) {
  if (ell.v < 1) throw error(errc::internal, "enumerate: ell must be positive");
  std::vector<Candidate> found;
  for (int j = 1; j <= 16; ++j)
    for (long long k : shear_parameters(ell))
      if (std::optional<Candidate> c = evaluate_candidate(ell, j, k)) found.push_back(std::move(*c));
  return finish_table(ell, std::move(found));
}

ClassTable enumerate_l_reflexive(Int ell, int jobs) {
  if (ell.v < 1) throw error(errc::internal, "enumerate: ell must be positive");
  std::vector<long long> ks = shear_parameters(ell);
  long long total = 16 * static_cast<long long>(ks.size());
  std::vector<Candidate> found;
  std::exception_ptr failure;
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<Candidate> local;
#pragma omp for schedule(dynamic) nowait
    for (long long idx = 0; idx < total; ++idx) {
      try {
        int j = static_cast<int>(idx / static_cast<long long>(ks.size())) + 1;
        long long k = ks[static_cast<size_t>(idx % static_cast<long long>(ks.size()))];
        if (std::optional<Candidate> c = evaluate_candidate(ell, j, k))
          local.push_back(std::move(*c));
      } catch (...) {
#pragma omp critical(lrp_enum_fail)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(lrp_enum_merge)
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
#else
  (void)jobs;
  for (long long idx = 0; idx < total; ++idx) {
    int j = static_cast<int>(idx / static_cast<long long>(ks.size())) + 1;
    long long k = ks[static_cast<size_t>(idx % static_cast<long long>(ks.size()))];
    if (std::optional<Candidate> c = evaluate_candidate(ell, j, k)) found.push_back(std::move(*c));
  }
#endif
  if (failure) std::rethrow_exception(failure);
  return finish_table(ell, std::move(found));
}

namespace {

CountRow count_row(const ClassTable& t, bool tmp_only) {
  CountRow row;
  row.ell = t.ell;
  for (const ClassEntry& c : t.classes) {
    if (tmp_only && !c.tmp) continue;
    row.by_nu[static_cast<size_t>(c.nu - 3)]++;
    row.total++;
  }
  if (tmp_only) row.genus = Int(3) * t.ell - Int(2);
  return row;
}

}  // namespace

std::vector<CountRow> rp_counts(Int max_ell, int jobs) {
  std::vector<CountRow> rows;
  for (long long l = 1; l <= max_ell.v; l += 2)
    rows.push_back(count_row(enumerate_l_reflexive(Int(l), jobs), false));
  return rows;
}

std::vector<CountRow> tmp_counts(Int max_ell, int jobs) {
  std::vector<CountRow> rows;
  for (long long l = 1; l <= max_ell.v; l += 2) rows.push_back(tmp_count_row(Int(l), jobs));
  return rows;
}

CountRow tmp_count_row(Int ell, int jobs) {
  return count_row(enumerate_l_reflexive(ell, jobs), true);
}

namespace {

struct FamilySpec {
  Family f;
  const char* name;
  // vertices as (cx, cy) pairs: vertex = (cx.first*ell + cx.second, ...)
  struct Coord {
    long long mul, add;
  };
  std::vector<std::pair<Coord, Coord>> vertices;
  long long min_ell;
  std::vector<long long> forbidden_divisors;
};

const std::vector<FamilySpec>& family_specs() {
  using C = FamilySpec::Coord;
  auto v = [](std::initializer_list<std::pair<C, C>> pts) {
    return std::vector<std::pair<C, C>>(pts);
  };
  static const std::vector<FamilySpec> specs = {
      {Family::triangle93, "triangle93",
       v({{{0, 5}, {-2, 0}}, {{0, -1}, {1, 0}}, {{0, -4}, {1, 0}}}), 1, {3, 5}},
      {Family::quad84, "quad84",
       v({{{0, 3}, {-1, 0}}, {{0, -1}, {1, 0}}, {{0, -3}, {1, 0}}, {{0, 1}, {-1, 0}}}), 1, {3}},
      {Family::pentagon75, "pentagon75",
       v({{{0, 3}, {-2, 0}}, {{0, 1}, {0, 0}}, {{0, -1}, {1, 0}}, {{0, -2}, {1, 0}},
          {{0, -1}, {0, 0}}}),
       1,
       {3}},
      {Family::hexagon66, "hexagon66",
       v({{{0, 1}, {0, 0}}, {{0, -1}, {1, 0}}, {{0, -2}, {1, 0}}, {{0, -1}, {0, 0}},
          {{0, 1}, {-1, 0}}, {{0, 2}, {-1, 0}}}),
       1,
       {}},
      {Family::tmp_triangle_i, "tmp-triangle-i",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 3}}, {{-3, 0}, {0, -5}}}), 7, {3, 5}},
      {Family::tmp_triangle_ii, "tmp-triangle-ii",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 5}}, {{-3, 0}, {0, -8}}}), 7, {3, 5, 13}},
      {Family::tmp_triangle_iii, "tmp-triangle-iii",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 7}}, {{-3, 0}, {0, -11}}}), 5, {3, 7, 11}},
      {Family::tmp_triangle_iv, "tmp-triangle-iv",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 9}}, {{-3, 0}, {0, -14}}}), 11, {3, 5, 7, 23}},
      {Family::tmp_triangle_v, "tmp-triangle-v",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 11}}, {{-3, 0}, {0, -17}}}), 13, {3, 5, 7, 11, 17}},
      {Family::tmp_triangle_vi, "tmp-triangle-vi",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 13}}, {{-3, 0}, {0, -20}}}), 17, {3, 5, 7, 11, 13}},
      {Family::tmp_triangle_vii, "tmp-triangle-vii",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 15}}, {{-3, 0}, {0, -23}}}), 11, {3, 5, 7, 19, 23}},
      {Family::tmp_triangle_viii, "tmp-triangle-viii",
       v({{{0, 0}, {0, 1}}, {{2, 0}, {0, 17}}, {{-3, 0}, {0, -26}}}), 11, {3, 5, 13, 17, 43}},
      {Family::tmp_quad_i, "tmp-quad-i",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 2}}, {{0, 0}, {0, 1}}, {{-2, 0}, {0, -3}}}), 5, {3}},
      {Family::tmp_quad_ii, "tmp-quad-ii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 3}}, {{0, 0}, {0, 1}}, {{-2, 0}, {0, -5}}}), 7, {3, 5}},
      {Family::tmp_quad_iii, "tmp-quad-iii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 4}}, {{0, 0}, {0, 1}}, {{-2, 0}, {0, -7}}}), 11,
       {3, 5, 7}},
      {Family::tmp_quad_iv, "tmp-quad-iv",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 5}}, {{0, 0}, {0, 1}}, {{-2, 0}, {0, -9}}}), 7, {3, 5}},
      {Family::tmp_quad_v, "tmp-quad-v",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 6}}, {{0, 0}, {0, 1}}, {{-2, 0}, {0, -11}}}), 13,
       {3, 5, 7, 11}},
      {Family::tmp_pentagon_i, "tmp-pentagon-i",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 3}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -2}}}),
       5,
       {3}},
      {Family::tmp_pentagon_ii, "tmp-pentagon-ii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 2}}, {{1, 0}, {0, 4}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -3}}}),
       7,
       {3, 5}},
      {Family::tmp_pentagon_iii, "tmp-pentagon-iii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 3}}, {{1, 0}, {0, 5}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -4}}}),
       11,
       {3, 5, 7}},
      {Family::tmp_pentagon_iv, "tmp-pentagon-iv",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 4}}, {{1, 0}, {0, 6}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -5}}}),
       11,
       {3, 5, 7}},
      {Family::tmp_pentagon_v, "tmp-pentagon-v",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 5}}, {{1, 0}, {0, 7}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -6}}}),
       13,
       {3, 5, 7, 11}},
      {Family::tmp_hexagon_i, "tmp-hexagon-i",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -1}}, {{-1, 0}, {0, -2}}}),
       3,
       {}},
      {Family::tmp_hexagon_ii, "tmp-hexagon-ii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 2}}, {{1, 0}, {0, 3}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -2}}, {{-1, 0}, {0, -3}}}),
       7,
       {3}},
      {Family::tmp_hexagon_iii, "tmp-hexagon-iii",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 3}}, {{1, 0}, {0, 4}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -3}}, {{-1, 0}, {0, -4}}}),
       13,
       {3}},
      {Family::tmp_hexagon_iv, "tmp-hexagon-iv",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 4}}, {{1, 0}, {0, 5}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -4}}, {{-1, 0}, {0, -5}}}),
       21,
       {5}},
      {Family::tmp_hexagon_v, "tmp-hexagon-v",
       v({{{0, 0}, {0, -1}}, {{1, 0}, {0, 5}}, {{1, 0}, {0, 6}}, {{0, 0}, {0, 1}},
          {{-1, 0}, {0, -5}}, {{-1, 0}, {0, -6}}}),
       31,
       {3, 5}},
  };
  return specs;
}

// triangle93/quad84/pentagon75 use x-coordinates with a fixed part and the
// others a multiple of ell; encode vertex coords as mul*ell + add on each axis.
Point2 family_vertex(const FamilySpec::Coord& cx, const FamilySpec::Coord& cy, Int ell) {
  return {Int(cx.mul) * ell + Int(cx.add), Int(cy.mul) * ell + Int(cy.add)};
}

}  // namespace

std::optional<Family> family_from_name(const std::string& name) {
  for (const FamilySpec& s : family_specs())
    if (name == s.name) return s.f;
  return std::nullopt;
}

const char* family_name(Family f) {
  for (const FamilySpec& s : family_specs())
    if (s.f == f) return s.name;
  throw error(errc::internal, "unknown family");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const FamilySpec& s : family_specs()) out.push_back(s.f);
  return out;
}

LatticePolygon family_polygon(Family f, Int ell) {
  for (const FamilySpec& s : family_specs()) {
    if (s.f != f) continue;
    if (ell.v % 2 == 0) throw error(errc::restriction_violated, "ell must be odd");
    if (ell.v < s.min_ell)
      throw error(errc::restriction_violated,
                  "ell must be >= " + std::to_string(s.min_ell));
    for (long long d : s.forbidden_divisors)
      if (ell.v % d == 0)
        throw error(errc::restriction_violated, std::to_string(d) + " divides ell");
    std::vector<Point2> pts;
    for (const auto& [cx, cy] : s.vertices) pts.push_back(family_vertex(cx, cy, ell));
    LatticePolygon q = make_polygon(std::move(pts));
    if (is_l_reflexive(q) != std::optional<Int>(ell))
      throw error(errc::internal, "family polygon is not l-reflexive");
    return q;
  }
  throw error(errc::internal, "unknown family");
}

}  // namespace lrp
