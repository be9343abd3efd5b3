#include "fairslice/division.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/valuation.hpp"

#include <doctest.h>

using namespace fairslice;

namespace {

// Two players: uniform, and density 2 on the left half.
CakeInstance half_instance() {
  CakeInstance instance;
  instance.players.push_back(PiecewiseConstantValuation::uniform());
  instance.players.push_back(
      PiecewiseConstantValuation::from_segments({{0, Rational(1, 2), 2}}));
  return instance;
}

}  // namespace

TEST_CASE("from_segments sorts, fills gaps and validates") {
  auto v = PiecewiseConstantValuation::from_segments(
      {{Rational(1, 2), 1, 3}, {0, Rational(1, 4), 1}});
  REQUIRE(v.segments().size() == 3);
  CHECK(v.segments()[1].density == 0);
  CHECK(v.total() == Rational(7, 4));

  CHECK_THROWS_AS(PiecewiseConstantValuation::from_segments(
                      {{0, Rational(3, 4), 1}, {Rational(1, 2), 1, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(PiecewiseConstantValuation::from_segments({{0, 2, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(PiecewiseConstantValuation::from_segments({{0, 1, -1}}),
                  ValidationError);
}

TEST_CASE("eval integrates the step density") {
  auto v = half_instance().players[1];
  CHECK(v.eval(0, 1) == 1);
  CHECK(v.eval(0, Rational(1, 4)) == Rational(1, 2));
  CHECK(v.eval(Rational(1, 2), 1) == 0);
  CHECK(v.eval(Rational(1, 4), Rational(3, 4)) == Rational(1, 2));
}

TEST_CASE("eval is additive across any midpoint") {
  auto instance = gen_random(3, 4, false, 99);
  const Rational points[] = {0, Rational(1, 7), Rational(2, 5), Rational(1, 2),
                             Rational(9, 10), 1};
  for (const auto& v : instance.players) {
    for (const Rational& a : points) {
      for (const Rational& c : points) {
        for (const Rational& b : points) {
          if (a <= c && c <= b) CHECK(v.eval(a, c) + v.eval(c, b) == v.eval(a, b));
        }
      }
    }
  }
}

TEST_CASE("inv_eval finds the leftmost point and is a right inverse") {
  auto uniform = PiecewiseConstantValuation::uniform();
  CHECK(uniform.inv_eval(0, Rational(1, 4)) == Rational(1, 4));
  CHECK(uniform.inv_eval(Rational(1, 2), Rational(1, 4)) == Rational(3, 4));
  CHECK(!uniform.inv_eval(Rational(1, 2), 1).has_value());
  CHECK(uniform.inv_eval(Rational(1, 3), 0) == Rational(1, 3));

  // leftmost: the zero-density plateau after 1/2 must not push b right
  auto v = half_instance().players[1];
  CHECK(v.inv_eval(0, 1) == Rational(1, 2));

  auto instance = gen_random(2, 5, false, 123);
  for (const auto& p : instance.players) {
    for (int k = 0; k <= 8; ++k) {
      Rational x(k, 8);
      auto b = p.inv_eval(Rational(1, 16), x);
      if (b.has_value()) CHECK(p.eval(Rational(1, 16), *b) == x);
    }
  }
}

TEST_CASE("normalize scales totals to 1 and is idempotent") {
  auto v = PiecewiseConstantValuation::from_segments({{0, Rational(1, 2), 6}});
  auto nv = normalize(v);
  CHECK(nv.total() == 1);
  CHECK(normalize(nv).segments() == nv.segments());
  CHECK_THROWS_AS(normalize(PiecewiseConstantValuation::from_segments({{0, 1, 0}})),
                  ValidationError);
}

TEST_CASE("welfare of connected divisions") {
  auto instance = half_instance();
  ConnectedDivision d{{Rational(1, 2)}, {1, 0}};
  auto report = welfare(instance, d);
  CHECK(report.utilities == std::vector<Rational>{Rational(1, 2), 1});
  CHECK(report.utilitarian == Rational(3, 2));
  CHECK(report.egalitarian == Rational(1, 2));

  // swapping the order swaps who gets which interval
  ConnectedDivision swapped{{Rational(1, 2)}, {0, 1}};
  auto r2 = welfare(instance, swapped);
  CHECK(r2.utilities == std::vector<Rational>{Rational(1, 2), 0});
}

TEST_CASE("welfare_discrete sums rows over pieces") {
  DiscreteInstance D{{{2, 1, 0}, {0, 1, 2}}};
  DiscreteDivision d{{Piece::range(1, 2), Piece::range(3, 3)}};
  auto report = welfare_discrete(D, d);
  CHECK(report.utilities == std::vector<Rational>{3, 2});
  CHECK(report.utilitarian == 5);
  CHECK(report.egalitarian == 2);

  DiscreteDivision empties{{Piece{}, Piece{}}};
  auto zero = welfare_discrete(D, empties);
  CHECK(zero.utilitarian == 0);
  CHECK(zero.egalitarian == 0);
}

TEST_CASE("validate_division reports every broken invariant") {
  auto bad = validate_division(ConnectedDivision{{Rational(1, 3), Rational(1, 4)}, {0, 1, 2}}, 3);
  REQUIRE(!bad.empty());
  CHECK(bad[0].find("unsorted") != std::string::npos);

  auto not_perm = validate_division(ConnectedDivision{{Rational(1, 2)}, {1, 1}}, 2);
  REQUIRE(!not_perm.empty());
  CHECK(not_perm[0].find("permutation") != std::string::npos);

  auto overlap =
      validate_division(DiscreteDivision{{Piece::range(1, 2), Piece::range(2, 3)}}, 2, 3);
  REQUIRE(!overlap.empty());
  CHECK(overlap[0].find("overlap") != std::string::npos);

  CHECK(validate_division(ConnectedDivision{{Rational(1, 2)}, {1, 0}}, 2).empty());
  CHECK(validate_division(DiscreteDivision{{Piece::range(1, 1), Piece::range(3, 3)}}, 2, 3)
            .empty());
}
