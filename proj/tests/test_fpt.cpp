#include "fairslice/approx.hpp"
#include "fairslice/fpt.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/oracle.hpp"

#include <doctest.h>

using namespace fairslice;

namespace {

CakeInstance half_instance() {
  CakeInstance instance;
  instance.players.push_back(PiecewiseConstantValuation::uniform());
  instance.players.push_back(
      PiecewiseConstantValuation::from_segments({{0, Rational(1, 2), 2}}));
  return instance;
}

CakeInstance uniform_players(int n) {
  CakeInstance instance;
  for (int i = 0; i < n; ++i) {
    instance.players.push_back(PiecewiseConstantValuation::uniform());
  }
  return instance;
}

}  // namespace

TEST_CASE("discrete utilitarian optimum on hand instances") {
  CHECK(fpt_util_discrete(DiscreteInstance{{{3, 0}, {0, 3}}}).report.utilitarian == 6);

  // two optimal witnesses exist (split after item 1 or 2), both worth 5
  DiscreteInstance mixed{{{2, 1, 0}, {0, 1, 2}}};
  auto r = fpt_util_discrete(mixed);
  CHECK(r.report.utilitarian == 5);
  CHECK(welfare_discrete(mixed, r.division).utilitarian == 5);
  CHECK(validate_division(r.division, 2, 3).empty());

  auto single = fpt_util_discrete(DiscreteInstance{{{1, 4, 2}}});
  CHECK(single.report.utilitarian == 7);
}

TEST_CASE("discrete utilitarian optimum matches brute force") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    auto D = gen_random_discrete(2 + seed % 3, 5, 9, seed);
    auto dp = fpt_util_discrete(D);
    auto opt = brute_force(D, Objective::Utilitarian);
    CHECK(dp.report.utilitarian == opt.report.utilitarian);
    CHECK(welfare_discrete(D, dp.division).utilitarian == dp.report.utilitarian);
    CHECK(validate_division(dp.division, D.n(), D.m()).empty());
  }
}

TEST_CASE("discrete egalitarian optimum matches brute force") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    auto D = gen_random_discrete(2 + seed % 3, 5, 9, seed);
    auto dp = egal_exact_discrete(D);
    auto opt = brute_force(D, Objective::Egalitarian);
    CHECK(dp.bound == opt.report.egalitarian);
    CHECK(welfare_discrete(D, dp.division).egalitarian == dp.bound);
  }
  CHECK(egal_exact_discrete(DiscreteInstance{{{3, 0}, {0, 3}}}).bound == 3);
  CHECK(egal_exact_discrete(DiscreteInstance{{{2, 1, 0}, {0, 1, 2}}}).bound == 2);
  CHECK(egal_exact_discrete(DiscreteInstance{{{0, 0}, {1, 1}}}).bound == 0);
}

TEST_CASE("continuous utilitarian welfare is within 1+eps of the optimum") {
  Rational eps(1, 4);
  auto r = fpt_util(half_instance(), eps);
  CHECK(r.report.utilitarian >= Rational(3, 2) / (1 + eps));
  CHECK(fpt_util(uniform_players(1), eps).report.utilitarian == 1);
  CHECK(fpt_util(uniform_players(3), eps).report.utilitarian >= 1 / (1 + eps));
  CHECK_THROWS_AS(fpt_util(half_instance(), 2), ValidationError);
}

TEST_CASE("egalitarian feasibility on uniform players") {
  auto two = uniform_players(2);
  auto feasible = egal_feasible(two, Rational(1, 2));
  REQUIRE(feasible.has_value());
  CHECK(feasible->cuts == std::vector<Rational>{Rational(1, 2)});
  CHECK(!egal_feasible(two, Rational(3, 5)).has_value());
  CHECK(egal_feasible(two, 0).has_value());
}

TEST_CASE("feasibility is monotone in the bound") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto instance = gen_random(3, 3, false, seed);
    Rational B(1, 4);
    if (!egal_feasible(instance, B).has_value()) continue;
    for (int k = 1; k <= 3; ++k) {
      CHECK(egal_feasible(instance, B * k / 4).has_value());
    }
  }
}

TEST_CASE("egalitarian binary search brackets the optimum") {
  Rational eps(1, 16);
  auto r = fpt_egal(half_instance(), eps);
  // optimum is 2/3: cut at 1/3, dense player left
  CHECK(r.bound >= (1 - eps) * Rational(2, 3));
  CHECK(r.bound <= Rational(2, 3));
  auto report = welfare(half_instance(), r.division);
  CHECK(report.egalitarian >= r.bound);
  CHECK(r.final_hi - r.bound <= eps / 2);

  for (int n = 2; n <= 4; ++n) {
    auto sym = fpt_egal(uniform_players(n), eps);
    CHECK(sym.bound >= (1 - eps) / n);
    CHECK(sym.bound <= Rational(1, n));
  }
}

TEST_CASE("continuous pipelines agree on a shared grid") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto instance = gen_random(3, 3, false, seed);
    auto C = run_discretization(instance, Rational(1, 8));
    auto D = to_discrete(instance, C);
    auto exact = fpt_util_discrete(D);
    auto greedy = approx_util_discrete(D);
    CHECK(exact.report.utilitarian >= greedy.report.utilitarian);
    CHECK(8 * greedy.report.utilitarian >= exact.report.utilitarian);
    CHECK(validate_division(exact.division, D.n(), D.m()).empty());
  }
}

TEST_CASE("player-count guard trips") {
  DiscreteInstance big;
  big.values.assign(25, std::vector<Rational>(2, Rational(1)));
  CHECK_THROWS_AS(fpt_util_discrete(big), GuardExceeded);
  CHECK_THROWS_AS(egal_exact_discrete(big), GuardExceeded);
}
