#pragma once

#include "fairslice/discretize.hpp"
#include "fairslice/division.hpp"

#include <optional>

namespace fairslice {

struct DiscreteOptResult {
  DiscreteDivision division;
  WelfareReport report;
};

// Exact discrete connected utilitarian optimum via a subset dynamic program
// over (player set, last owner, item prefix), with the witness reconstructed
// by backtracking. All items are allocated; with nonnegative values this
// never lowers the optimum.
DiscreteOptResult fpt_util_discrete(const DiscreteInstance& D, int max_players = 20);

struct ContinuousOptResult {
  ConnectedDivision division;
  WelfareReport report;
};

// Discretize with precision eps/(2(n-1)) (eps itself when n == 1), solve the
// discrete instance exactly, lift. Welfare is within a 1+eps factor of the
// continuous optimum for eps in (0,1].
ContinuousOptResult fpt_util(const CakeInstance& instance, const Rational& eps,
                             int max_players = 20);

// Leftmost-packing feasibility check: can every player receive utility at
// least B with connected pieces? Returns a witness division on success; the
// rightmost player absorbs the residual cake.
std::optional<ConnectedDivision> egal_feasible(const CakeInstance& instance, const Rational& B);

struct EgalSearchResult {
  Rational bound;  // highest feasible probe found
  ConnectedDivision division;
  Rational final_hi;  // first infeasible probe bracketing the optimum
};

// Binary search on the egalitarian bound over [0,1] for ceil(log2(n/eps))
// iterations. Guarantees bound >= (1-eps) * optimum and bound >= (1-eps)/n.
EgalSearchResult fpt_egal(const CakeInstance& instance, const Rational& eps,
                          int max_players = 20);

struct DiscreteEgalResult {
  Rational bound;
  DiscreteDivision division;
};

// Exact discrete connected egalitarian optimum via a subset max-min dynamic
// program. Players may receive empty pieces (utility 0); items may stay
// unallocated, which never changes the optimum for nonnegative values.
DiscreteEgalResult egal_exact_discrete(const DiscreteInstance& D, int max_players = 20);

}  // namespace fairslice
