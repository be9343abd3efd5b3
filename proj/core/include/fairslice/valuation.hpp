#pragma once

#include "fairslice/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairslice {

// One constant-density piece of a value density function.
struct Segment {
  Rational start;
  Rational end;
  Rational density;

  bool operator==(const Segment&) const = default;
};

// A step-function value density over the cake [0,1]. Segments are sorted,
// non-overlapping and cover [0,1] exactly; zero-density gaps are stored
// explicitly.
class PiecewiseConstantValuation {
 public:
  // Sorts the pieces, fills gaps with zero-density segments and validates
  // coverage of [0,1]. Throws ValidationError on overlap or out-of-range
  // endpoints.
  static PiecewiseConstantValuation from_segments(std::vector<Segment> segments);

  // Uniform density `d` over the whole cake.
  static PiecewiseConstantValuation uniform(const Rational& d = 1);

  const std::vector<Segment>& segments() const { return segments_; }

  // Total value of the whole cake.
  Rational total() const;

  // Integral of the density over [a,b]. Requires 0 <= a <= b <= 1.
  Rational eval(const Rational& a, const Rational& b) const;

  // Leftmost b >= a with eval(a,b) == x, or nullopt when the remaining
  // value eval(a,1) is smaller than x. Requires 0 <= a <= 1 and x >= 0.
  std::optional<Rational> inv_eval(const Rational& a, const Rational& x) const;

  bool is_normalized() const { return total() == 1; }

 private:
  std::vector<Segment> segments_;
};

// Scales the densities so the total value becomes 1. Throws ValidationError
// for an identically-zero valuation.
PiecewiseConstantValuation normalize(const PiecewiseConstantValuation& v);

struct CakeInstance {
  std::vector<PiecewiseConstantValuation> players;
  std::vector<std::string> names;  // optional labels, empty or size n
  bool raw = false;                // true: valuations not normalized at load

  int n() const { return static_cast<int>(players.size()); }
};

}  // namespace fairslice
