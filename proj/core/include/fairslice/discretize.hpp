#pragma once

#include "fairslice/division.hpp"
#include "fairslice/rational.hpp"
#include "fairslice/valuation.hpp"

#include <vector>

namespace fairslice {

// Strictly increasing cut positions, first 0 and last 1, together with the
// precision used to generate them.
struct CutSet {
  std::vector<Rational> points;
  Rational epsilon;

  int items() const { return static_cast<int>(points.size()) - 1; }
};

// Repeatedly cuts at the leftmost point where some player's value since the
// last cut reaches eps, until no player values the remainder above eps.
// Every resulting inter-cut item is worth at most eps to every player.
CutSet run_discretization(const CakeInstance& instance, const Rational& eps);

// values[i][j] = v_i(c_j, c_{j+1}) for consecutive cut points.
DiscreteInstance to_discrete(const CakeInstance& instance, const CutSet& C);

// Moves every cut right to the nearest grid point; the order is unchanged.
// Utilitarian welfare drops by at most (n-1)*eps, each player's utility by
// at most eps.
ConnectedDivision snap_division(const ConnectedDivision& d, const CutSet& C);

// Inverse of to_discrete: turns a discrete division on the grid back into a
// continuous one cutting at grid points. Unallocated items are absorbed by
// the piece to their left (the leftmost piece also absorbs any leading gap),
// so per-player utility never decreases; it is preserved exactly whenever
// the discrete division covers all items. Players with Empty pieces receive
// zero-length intervals at 0.
ConnectedDivision lift_division(const DiscreteDivision& d, const CutSet& C, int n);

}  // namespace fairslice
