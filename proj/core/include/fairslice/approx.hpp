#pragma once

#include "fairslice/discretize.hpp"
#include "fairslice/division.hpp"

#include <vector>

namespace fairslice {

// One grant step of the discrete utilitarian approximation loop.
struct ApproxTraceStep {
  int t = 0;       // current item (1-based)
  int player = 0;  // k', 0-based
  int s = 0;       // s', 1-based
  Rational granted_value;     // v_{k'}(s', t)
  Rational displaced_own;     // v_{k'}(s_{k'}, t_{k'}) before the grant
  Rational displaced_others;  // V_{-k'}(s', t) before the grant
  Rational owned_sum;         // sum_i v_i(s_i, t_i) after the grant
  Rational ever_owned_sum;    // sum_{i,j} x_i^j v_i(j) after the grant
};

struct ApproxDiscreteResult {
  DiscreteDivision division;
  WelfareReport report;
  std::vector<ApproxTraceStep> trace;
};

// Greedy grant loop over items t = 1..m: while some never-granted (k, s<=t)
// has v_k(s,t) at least twice the cost of displacing the current owners,
// grant (s,t) to the maximizing k (ties: smallest player, then smallest s).
// Owners fully inside the granted range are evicted; an owner straddling s'
// keeps her prefix. The result is a valid division with utilitarian welfare
// at least one eighth of the discrete connected optimum.
ApproxDiscreteResult approx_util_discrete(const DiscreteInstance& D, bool record_trace = false);

struct ApproxContinuousResult {
  ConnectedDivision division;
  WelfareReport report;
  std::vector<ApproxTraceStep> trace;
};

// Discretize with precision eps, run the discrete approximation, lift back.
// Welfare is within a factor 8*(1+(n-1)*eps) of the continuous optimum.
ApproxContinuousResult approx_util(const CakeInstance& instance, const Rational& eps,
                                   bool record_trace = false);

}  // namespace fairslice
