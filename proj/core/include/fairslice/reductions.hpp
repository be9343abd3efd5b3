#pragma once

#include "fairslice/discretize.hpp"
#include "fairslice/division.hpp"
#include "fairslice/rational.hpp"
#include "fairslice/valuation.hpp"

#include <array>
#include <vector>

namespace fairslice {

// Three-dimensional matching over ground sets of size q each; triples hold
// 1-based element indices.
struct ThreeDMInstance {
  int q = 0;
  std::vector<std::array<int, 3>> triples;
};

struct McspSegment {
  int begin = 0;  // 1-based, inclusive
  int end = 0;
};

// Choose one segment per family, all pairwise disjoint.
struct McspInstance {
  int m = 0;
  std::vector<std::vector<McspSegment>> families;

  int total_segments() const;
};

struct ReductionOutput {
  CakeInstance cake;
  CutSet grid;  // density breakpoints of the generated cake
  DiscreteInstance discrete;
  Rational bound;  // welfare threshold separating yes from no instances
};

// Egalitarian hardness construction: triplet, ground-set and separation
// players on a cake of 2|E| sections rescaled to [0,1]. Yes-instances admit
// egalitarian welfare >= bound = 1/|E|; no-instances stay at or below half
// of it. Requires every ground element to occur in at least one triple.
ReductionOutput from_3dm(const ThreeDMInstance& inst);

// Utilitarian hardness construction: segment and separation players over a
// segments range plus per-family compensation ranges, rescaled to [0,1].
// bound = (4/3) * sum |A_i| - n. Requires |A_i| >= 2 for every family.
ReductionOutput from_mcsp(const McspInstance& inst);

// Exhaustive reference solvers for the source problems.
bool solve_3dm(const ThreeDMInstance& inst, int max_triples = 12);
bool solve_mcsp(const McspInstance& inst, int max_total_segments = 12);

// Families of all consecutive item ranges worth at least B to each player;
// the discrete egalitarian threshold problem reduces to MCSP this way.
McspInstance mcsp_from_discrete_egal(const DiscreteInstance& D, const Rational& B);

}  // namespace fairslice
