#pragma once

#include "fairslice/division.hpp"
#include "fairslice/lp.hpp"
#include "fairslice/valuation.hpp"

#include <vector>

namespace fairslice {

// Union of all players' segment breakpoints plus {0,1}; every player's
// density is constant on each derived interval.
struct SegmentGrid {
  std::vector<Rational> boundaries;

  int intervals() const { return static_cast<int>(boundaries.size()) - 1; }
};

SegmentGrid segment_grid(const CakeInstance& instance);

// fraction[i][k]: share of grid interval k given to player i, in [0,1],
// summing to at most 1 per interval.
struct FractionalAssignment {
  std::vector<Rational> boundaries;
  std::vector<std::vector<Rational>> fraction;

  std::vector<Rational> utilities(const CakeInstance& instance) const;
};

struct NonconnectedUtilResult {
  FractionalAssignment assignment;
  WelfareReport report;
};

// Gives each grid interval wholly to a maximum-density player (ties toward
// the smallest index). This is the exact non-connected utilitarian optimum.
NonconnectedUtilResult util_nonconnected(const CakeInstance& instance);

struct NonconnectedEgalResult {
  Rational t;  // optimal worst-off utility
  FractionalAssignment assignment;
};

// Exact LP: maximize t subject to per-player utility >= t and per-interval
// shares summing to at most 1.
NonconnectedEgalResult egal_nonconnected(const CakeInstance& instance);

// The LP behind egal_nonconnected; exposed so its witness can be checked
// directly. Variables: x[i][k] row-major, then t last.
StandardLP build_egal_lp(const CakeInstance& instance, const SegmentGrid& grid);

}  // namespace fairslice
