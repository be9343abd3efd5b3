#include "fairslice/fpt.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/oracle.hpp"
#include "fairslice/reductions.hpp"

#include <doctest.h>

using namespace fairslice;

TEST_CASE("random generation is deterministic and normalized") {
  auto a = gen_random(2, 3, false, 42);
  auto b = gen_random(2, 3, false, 42);
  REQUIRE(a.n() == b.n());
  for (int i = 0; i < a.n(); ++i) {
    CHECK(a.players[i].segments() == b.players[i].segments());
    CHECK(a.players[i].total() == 1);
  }
  auto c = gen_random(2, 3, false, 43);
  bool differs = false;
  for (int i = 0; i < a.n(); ++i) {
    differs = differs || !(a.players[i].segments() == c.players[i].segments());
  }
  CHECK(differs);
}

TEST_CASE("piecewise-uniform players have a single nonzero density") {
  auto instance = gen_random(3, 4, true, 7);
  for (const auto& p : instance.players) {
    Rational level = 0;
    for (const Segment& s : p.segments()) {
      if (s.density == 0) continue;
      if (level == 0) level = s.density;
      CHECK(s.density == level);
    }
    CHECK(level > 0);
  }
}

TEST_CASE("singleton matching instance is solvable at the bound") {
  ThreeDMInstance inst{1, {{1, 1, 1}}};
  CHECK(solve_3dm(inst));
  auto r = from_3dm(inst);
  CHECK(r.cake.n() == 4);  // 1 triplet + 3 separation players
  CHECK(r.bound == 1);
  for (const auto& p : r.cake.players) CHECK(p.total() == 1);
  CHECK(egal_exact_discrete(r.discrete).bound == 1);
}

TEST_CASE("uncoverable matching instance stays below half the bound") {
  // no pair of triples covers both elements of all three ground sets
  ThreeDMInstance inst{2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}}};
  CHECK(!solve_3dm(inst));
  auto r = from_3dm(inst);
  CHECK(r.bound == Rational(1, 3));
  CHECK(egal_exact_discrete(r.discrete).bound <= Rational(1, 6));
}

TEST_CASE("matching construction rejects unused ground elements") {
  CHECK_THROWS_AS(from_3dm(ThreeDMInstance{2, {{1, 1, 1}}}), ValidationError);
}

TEST_CASE("solvable segment packing reaches the utilitarian bound") {
  McspInstance inst{3, {{{1, 1}, {3, 3}}, {{2, 2}, {3, 3}}}};
  CHECK(solve_mcsp(inst));
  auto r = from_mcsp(inst);
  CHECK(r.bound == Rational(10, 3));
  for (const auto& p : r.cake.players) CHECK(p.total() == 1);
  CHECK(fpt_util_discrete(r.discrete).report.utilitarian >= r.bound);
}

TEST_CASE("unsolvable segment packing stays strictly below the bound") {
  McspInstance inst{3, {{{1, 2}, {2, 3}}, {{2, 2}, {1, 3}}}};
  CHECK(!solve_mcsp(inst));
  auto r = from_mcsp(inst);
  CHECK(r.bound == Rational(10, 3));
  CHECK(fpt_util_discrete(r.discrete).report.utilitarian < r.bound);
}

TEST_CASE("segment packing construction rejects single-segment families") {
  CHECK_THROWS_AS(from_mcsp(McspInstance{2, {{{1, 1}}}}), ValidationError);
}

TEST_CASE("egalitarian threshold problems translate to segment packing") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    auto D = gen_random_discrete(3, 5, 5, seed);
    Rational opt = brute_force(D, Objective::Egalitarian).report.egalitarian;
    for (const Rational& B : {Rational(1), opt, Rational(opt + 1)}) {
      if (B <= 0) continue;
      auto packing = mcsp_from_discrete_egal(D, B);
      bool any_empty = false;
      for (const auto& family : packing.families) any_empty |= family.empty();
      CHECK((any_empty ? false : solve_mcsp(packing, 80)) == (opt >= B));
    }
  }
}

TEST_CASE("exhaustive solver guards trip") {
  ThreeDMInstance big{3, std::vector<std::array<int, 3>>(13, {1, 1, 1})};
  CHECK_THROWS_AS(solve_3dm(big), GuardExceeded);
  McspInstance wide{4, {std::vector<McspSegment>(13, {1, 1})}};
  CHECK_THROWS_AS(solve_mcsp(wide), GuardExceeded);
}
