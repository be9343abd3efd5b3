#pragma once

#include "fairslice/rational.hpp"

#include <vector>

namespace fairslice {

// maximize objective . x  subject to  rows[r] . x <= rhs[r],  x >= 0.
struct StandardLP {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  int variables() const { return static_cast<int>(objective.size()); }
  int constraints() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;  // primal witness, exact
};

// Exact rational simplex with Bland's anti-cycling rule; two phases when the
// all-slack basis is infeasible.
LpSolution solve_lp(const StandardLP& lp);

}  // namespace fairslice
