#pragma once

#include "lrp/covering.hpp"

namespace lrp {

struct ClassEntry {
  GraphKey key;
  LatticePolygon rep;
  int nu = 0;
  Int boundary_q, boundary_dual;
  Int genus;
  bool tmp = false;
  int j = 0;  // smallest (j,k) candidate producing this class
  Int k = 0;
};

struct ClassTable {
  Int ell;
  std::vector<ClassEntry> classes;  // sorted by key
};

// Enumerate the l-reflexive classes from the sheared reflexive representatives.
// The candidate loop is OpenMP-parallel; jobs = 0 uses the runtime default,
// jobs = 1 forces one thread. Output is deterministic regardless of jobs.
ClassTable enumerate_l_reflexive(Int ell, int jobs = 0);

// Plain-loop reference implementation with identical output, kept for testing
// and benchmarking against the parallel kernel.
ClassTable enumerate_l_reflexive_serial(Int ell);

struct CountRow {
  Int ell;
  std::array<long long, 4> by_nu{};  // nu = 3,4,5,6
  long long total = 0;
  Int genus = 0;  // only meaningful for mirror-property tables
};

// Rows for odd ell <= max_ell.
std::vector<CountRow> rp_counts(Int max_ell, int jobs = 0);
// Same, restricted to classes with the topological mirror property; the genus
// column carries the common sectional genus 3*ell - 2.
std::vector<CountRow> tmp_counts(Int max_ell, int jobs = 0);
CountRow tmp_count_row(Int ell, int jobs = 0);

enum class Family {
  triangle93,   // boundary pair (9,3); needs odd ell, 3 and 5 coprime to ell
  quad84,       // (8,4); odd ell, 3 coprime
  pentagon75,   // (7,5); odd ell, 3 coprime
  hexagon66,    // (6,6); odd ell
  tmp_triangle_i,
  tmp_triangle_ii,
  tmp_triangle_iii,
  tmp_triangle_iv,
  tmp_triangle_v,
  tmp_triangle_vi,
  tmp_triangle_vii,
  tmp_triangle_viii,
  tmp_quad_i,
  tmp_quad_ii,
  tmp_quad_iii,
  tmp_quad_iv,
  tmp_quad_v,
  tmp_pentagon_i,
  tmp_pentagon_ii,
  tmp_pentagon_iii,
  tmp_pentagon_iv,
  tmp_pentagon_v,
  tmp_hexagon_i,
  tmp_hexagon_ii,
  tmp_hexagon_iii,
  tmp_hexagon_iv,
  tmp_hexagon_v,
};

std::optional<Family> family_from_name(const std::string& name);
const char* family_name(Family f);
std::vector<Family> all_families();

// The parametrized l-reflexive polygon of the family; throws
// RESTRICTION_VIOLATED when ell violates the family's divisibility and
// lower-bound conditions.
LatticePolygon family_polygon(Family f, Int ell);

}  // namespace lrp
