#include "fairslice/lp.hpp"

#include <vector>

namespace fairslice {

namespace {

// Dense tableau: rows_ x (cols_ + 1), last column is the rhs. basis_[r] is
// the variable currently basic in row r. cost_ is the reduced-cost row for
// the phase objective (maximization; entering columns have cost_ < 0).
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), basis_(rows) {
    tab_.assign(rows, std::vector<Rational>(cols + 1, Rational(0)));
    cost_.assign(cols + 1, Rational(0));
  }

  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
  int rows_, cols_;

  void pivot(int row, int col) {
    Rational p = tab_[row][col];
    for (int j = 0; j <= cols_; ++j) tab_[row][j] /= p;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || tab_[r][col] == 0) continue;
      Rational f = tab_[r][col];
      for (int j = 0; j <= cols_; ++j) tab_[r][j] -= f * tab_[row][j];
    }
    if (cost_[col] != 0) {
      Rational f = cost_[col];
      for (int j = 0; j <= cols_; ++j) cost_[j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  // Bland's rule: smallest entering column with negative reduced cost,
  // smallest basic variable on ratio ties. Returns false when unbounded.
  bool optimize() {
    while (true) {
      int col = -1;
      for (int j = 0; j < cols_; ++j) {
        if (cost_[j] < 0) {
          col = j;
          break;
        }
      }
      if (col < 0) return true;
      int row = -1;
      Rational best_ratio;
      for (int r = 0; r < rows_; ++r) {
        if (tab_[r][col] <= 0) continue;
        Rational ratio = tab_[r][cols_] / tab_[r][col];
        if (row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[row])) {
          row = r;
          best_ratio = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpSolution solve_lp(const StandardLP& lp) {
  const int n = lp.variables();
  const int m = lp.constraints();
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("ragged LP row");
  }
  if (static_cast<int>(lp.rhs.size()) != m) throw ValidationError("rhs size mismatch");

  bool need_phase1 = false;
  for (const Rational& b : lp.rhs) {
    if (b < 0) need_phase1 = true;
  }

  // Columns: 0..n-1 original, n..n+m-1 slacks, optionally n+m artificial.
  const int cols = n + m + (need_phase1 ? 1 : 0);
  Tableau T(m, cols);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) T.tab_[r][j] = lp.rows[r][j];
    T.tab_[r][n + r] = 1;
    if (need_phase1) T.tab_[r][n + m] = -1;
    T.tab_[r][cols] = lp.rhs[r];
    T.basis_[r] = n + r;
  }

  if (need_phase1) {
    // Maximize -x0: one pivot on the most negative row makes the basis
    // feasible, then run to optimality.
    T.cost_[n + m] = 1;
    int worst = 0;
    for (int r = 1; r < m; ++r) {
      if (T.tab_[r][cols] < T.tab_[worst][cols]) worst = r;
    }
    T.pivot(worst, n + m);
    T.optimize();
    if (T.cost_[cols] < 0) return LpSolution{LpStatus::Infeasible, 0, {}};
    // Pivot the artificial variable out of the basis if it lingers at zero.
    for (int r = 0; r < m; ++r) {
      if (T.basis_[r] != n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (T.tab_[r][j] != 0) {
          T.pivot(r, j);
          break;
        }
      }
    }
    // Rebuild the reduced-cost row for the real objective.
    T.cost_.assign(cols + 1, Rational(0));
    for (int j = 0; j < n; ++j) T.cost_[j] = -lp.objective[j];
    T.cost_[n + m] = 1;  // keep the artificial variable out
    for (int r = 0; r < m; ++r) {
      int b = T.basis_[r];
      if (T.cost_[b] != 0) {
        Rational f = T.cost_[b];
        for (int j = 0; j <= cols; ++j) T.cost_[j] -= f * T.tab_[r][j];
      }
    }
  } else {
    for (int j = 0; j < n; ++j) T.cost_[j] = -lp.objective[j];
  }

  if (!T.optimize()) return LpSolution{LpStatus::Unbounded, 0, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (int r = 0; r < m; ++r) {
    if (T.basis_[r] < n) sol.x[T.basis_[r]] = T.tab_[r][cols];
  }
  sol.value = 0;
  for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace fairslice
