#include "fairslice/lp.hpp"

#include <doctest.h>

using namespace fairslice;

TEST_CASE("single bounded variable") {
  StandardLP lp{{1}, {{1}}, {1}};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.x == std::vector<Rational>{1});
}

TEST_CASE("degenerate tie on a shared budget") {
  StandardLP lp{{1, 1}, {{1, 1}}, {1}};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.x[0] + sol.x[1] == 1);
}

TEST_CASE("chained bound through an auxiliary variable") {
  // max t s.t. t - x <= 0, x <= 1
  StandardLP lp{{1, 0}, {{1, -1}, {0, 1}}, {0, 1}};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
}

TEST_CASE("unbounded objective is detected") {
  StandardLP lp{{1}, {{-1}}, {1}};
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("negative right-hand sides go through phase one") {
  // max -x s.t. -x <= -2  (i.e. x >= 2); optimum x = 2
  StandardLP lp{{-1}, {{-1}}, {-2}};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == -2);
  CHECK(sol.x == std::vector<Rational>{2});
}

TEST_CASE("infeasible system is detected") {
  // x <= 1 and x >= 2
  StandardLP lp{{1}, {{1}, {-1}}, {1, -2}};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("exact fractional optimum") {
  // max x + y s.t. 2x + y <= 1, x + 3y <= 1 -> x = 2/5, y = 1/5
  StandardLP lp{{1, 1}, {{2, 1}, {1, 3}}, {1, 1}};
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(3, 5));
  CHECK(sol.x == std::vector<Rational>{Rational(2, 5), Rational(1, 5)});
}
