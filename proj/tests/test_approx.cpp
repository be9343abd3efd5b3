#include "fairslice/approx.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/oracle.hpp"

#include <doctest.h>

using namespace fairslice;

TEST_CASE("two specialists each get their own item") {
  DiscreteInstance D{{{3, 0}, {0, 3}}};
  auto result = approx_util_discrete(D);
  CHECK(result.division.pieces[0].s == 1);
  CHECK(result.division.pieces[0].t == 1);
  CHECK(result.division.pieces[1].s == 2);
  CHECK(result.division.pieces[1].t == 2);
  CHECK(result.report.utilitarian == 6);
}

TEST_CASE("all-zero values terminate with zero welfare") {
  DiscreteInstance D{{{0, 0, 0}, {0, 0, 0}}};
  auto result = approx_util_discrete(D);
  CHECK(result.report.utilitarian == 0);
  CHECK(validate_division(result.division, 2, 3).empty());
}

TEST_CASE("single player welfare is within a factor 8 of her best range") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto D = gen_random_discrete(1, 6, 9, seed);
    Rational best = 0;
    for (int s = 1; s <= 6; ++s) {
      Rational acc = 0;
      for (int t = s; t <= 6; ++t) {
        acc += D.values[0][t - 1];
        best = std::max(best, acc);
      }
    }
    CHECK(8 * approx_util_discrete(D).report.utilitarian >= best);
  }
}

TEST_CASE("trace invariant: owned <= ever-owned <= 2*owned") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    auto D = gen_random_discrete(3, 8, 9, seed);
    auto result = approx_util_discrete(D, true);
    Rational prev_ever = 0;
    for (const auto& step : result.trace) {
      CHECK(step.owned_sum <= step.ever_owned_sum);
      CHECK(step.ever_owned_sum <= 2 * step.owned_sum);
      CHECK(step.ever_owned_sum >= prev_ever);
      prev_ever = step.ever_owned_sum;
    }
    CHECK(validate_division(result.division, D.n(), D.m()).empty());
    CHECK(static_cast<int>(result.trace.size()) <= D.n() * D.m() * D.m());
  }
}

TEST_CASE("discrete welfare is an 8-approximation of the brute-force optimum") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    auto D = gen_random_discrete(3, 6, 9, seed);
    auto approx = approx_util_discrete(D);
    auto opt = brute_force(D, Objective::Utilitarian);
    CHECK(8 * approx.report.utilitarian >= opt.report.utilitarian);
  }
}

TEST_CASE("continuous pipeline on the half instance") {
  CakeInstance instance;
  instance.players.push_back(PiecewiseConstantValuation::uniform());
  instance.players.push_back(
      PiecewiseConstantValuation::from_segments({{0, Rational(1, 2), 2}}));
  Rational eps(1, 8);
  auto result = approx_util(instance, eps);
  // continuous optimum is 3/2 (cut at 1/2, uniform player right)
  CHECK(result.report.utilitarian >= Rational(3, 2) / (8 * (1 + eps)));
  CHECK(validate_division(result.division, 2).empty());
}

TEST_CASE("single uniform player takes the whole cake") {
  CakeInstance instance;
  instance.players.push_back(PiecewiseConstantValuation::uniform());
  auto result = approx_util(instance, Rational(1, 4));
  CHECK(result.report.utilitarian == 1);
}
