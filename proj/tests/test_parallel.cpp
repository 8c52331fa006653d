#include <doctest.h>

#include "lrp/classify.hpp"

using namespace lrp;

namespace {

void check_same(const ClassTable& a, const ClassTable& b) {
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].key == b.classes[i].key);
    CHECK(a.classes[i].rep == b.classes[i].rep);
    CHECK(a.classes[i].j == b.classes[i].j);
    CHECK(a.classes[i].k == b.classes[i].k);
    CHECK(a.classes[i].boundary_q == b.classes[i].boundary_q);
    CHECK(a.classes[i].genus == b.classes[i].genus);
  }
}

}  // namespace

TEST_CASE("parallel enumeration matches the serial reference") {
  for (long long ell : {1, 2, 3, 5, 7, 9, 15, 25, 33}) {
    ClassTable serial = enumerate_l_reflexive_serial(ell);
    check_same(serial, enumerate_l_reflexive(ell, 0));
    check_same(serial, enumerate_l_reflexive(ell, 1));
    check_same(serial, enumerate_l_reflexive(ell, 3));
  }
}

TEST_CASE("thread count does not change counts") {
  for (int jobs : {1, 2, 5}) {
    CHECK(tmp_count_row(35, jobs).total == 12);
    CHECK(tmp_count_row(35, jobs).by_nu == std::array<long long, 4>{2, 3, 4, 3});
  }
}
