#include "fairslice/nonconnected.hpp"

#include <algorithm>

namespace fairslice {

SegmentGrid segment_grid(const CakeInstance& instance) {
  SegmentGrid grid;
  grid.boundaries.push_back(0);
  grid.boundaries.push_back(1);
  for (const auto& v : instance.players) {
    for (const Segment& s : v.segments()) {
      grid.boundaries.push_back(s.start);
      grid.boundaries.push_back(s.end);
    }
  }
  std::sort(grid.boundaries.begin(), grid.boundaries.end());
  grid.boundaries.erase(std::unique(grid.boundaries.begin(), grid.boundaries.end()),
                        grid.boundaries.end());
  return grid;
}

std::vector<Rational> FractionalAssignment::utilities(const CakeInstance& instance) const {
  std::vector<Rational> out(instance.n(), Rational(0));
  for (int i = 0; i < instance.n(); ++i) {
    for (size_t k = 0; k + 1 < boundaries.size(); ++k) {
      if (fraction[i][k] == 0) continue;
      out[i] += fraction[i][k] * instance.players[i].eval(boundaries[k], boundaries[k + 1]);
    }
  }
  return out;
}

NonconnectedUtilResult util_nonconnected(const CakeInstance& instance) {
  SegmentGrid grid = segment_grid(instance);
  const int n = instance.n();
  const int J = grid.intervals();
  NonconnectedUtilResult result;
  result.assignment.boundaries = grid.boundaries;
  result.assignment.fraction.assign(n, std::vector<Rational>(J, Rational(0)));
  for (int k = 0; k < J; ++k) {
    int best = 0;
    Rational best_value =
        instance.players[0].eval(grid.boundaries[k], grid.boundaries[k + 1]);
    for (int i = 1; i < n; ++i) {
      Rational v = instance.players[i].eval(grid.boundaries[k], grid.boundaries[k + 1]);
      if (v > best_value) {
        best = i;
        best_value = v;
      }
    }
    result.assignment.fraction[best][k] = 1;
  }
  result.report = WelfareReport::from_utilities(result.assignment.utilities(instance));
  return result;
}

StandardLP build_egal_lp(const CakeInstance& instance, const SegmentGrid& grid) {
  const int n = instance.n();
  const int J = grid.intervals();
  const int nv = n * J + 1;  // x variables then t
  StandardLP lp;
  lp.objective.assign(nv, Rational(0));
  lp.objective[nv - 1] = 1;
  // t - sum_k v_i(I_k) x_i^k <= 0 for each player i
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(nv, Rational(0));
    for (int k = 0; k < J; ++k) {
      row[i * J + k] = -instance.players[i].eval(grid.boundaries[k], grid.boundaries[k + 1]);
    }
    row[nv - 1] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(0);
  }
  // sum_i x_i^k <= 1 for each interval
  for (int k = 0; k < J; ++k) {
    std::vector<Rational> row(nv, Rational(0));
    for (int i = 0; i < n; ++i) row[i * J + k] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1);
  }
  return lp;
}

NonconnectedEgalResult egal_nonconnected(const CakeInstance& instance) {
  SegmentGrid grid = segment_grid(instance);
  const int n = instance.n();
  const int J = grid.intervals();
  LpSolution sol = solve_lp(build_egal_lp(instance, grid));
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("egalitarian LP must have an optimum");
  }
  NonconnectedEgalResult result;
  result.t = sol.value;
  result.assignment.boundaries = grid.boundaries;
  result.assignment.fraction.assign(n, std::vector<Rational>(J, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < J; ++k) result.assignment.fraction[i][k] = sol.x[i * J + k];
  }
  return result;
}

}  // namespace fairslice
