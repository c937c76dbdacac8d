#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaoforge/properties.hpp"

using namespace gaoforge;

TEST_CASE("lemma suites") {
  for (Int n : {3, 9, 5, 25, 7}) CHECK(check_gri(n).pass());
  for (Int n : {4, 8, 16}) CHECK(check_2r0(n).pass());
  for (Int n : {6, 10, 14}) CHECK(check_w(n).pass());
  CHECK_THROWS_AS(check_gri(12), std::invalid_argument);
  CHECK_THROWS_AS(check_2r0(12), std::invalid_argument);
  CHECK_THROWS_AS(check_w(12), std::invalid_argument);
}

TEST_CASE("randomized suites") {
  const auto lifts = check_lifts(300, 7);
  CHECK(lifts.pass());
  CHECK(check_obs(300, 7).pass());
  CHECK(check_unit_invariance(300, 7).pass());
  CHECK(check_lifts(300, 7).cases == lifts.cases);
}

TEST_CASE("dp against subsets") {
  const auto t = check_dp_vs_naive(7, 4);
  CHECK(t.pass());
  CHECK(t.cases > 1000);
}
