#include "fairslice/approx.hpp"

#include <vector>

namespace fairslice {

namespace {

class GrantState {
 public:
  explicit GrantState(const DiscreteInstance& D)
      : D_(D), n_(D.n()), m_(D.m()), pieces_(n_), ever_owned_(n_, std::vector<char>(m_ + 1, 0)) {
    prefix_.assign(n_, std::vector<Rational>(m_ + 1, Rational(0)));
    for (int i = 0; i < n_; ++i) {
      for (int j = 1; j <= m_; ++j) prefix_[i][j] = prefix_[i][j - 1] + D_.values[i][j - 1];
    }
  }

  Rational value(int i, int s, int t) const {
    if (s > t) return 0;
    return prefix_[i][t] - prefix_[i][s - 1];
  }

  Rational owned(int i) const {
    const Piece& p = pieces_[i];
    return p.empty() ? Rational(0) : value(i, p.s, p.t);
  }

  // Value the current owners other than k obtain from items s..t.
  Rational displaced_others(int k, int s, int t) const {
    Rational acc = 0;
    for (int i = 0; i < n_; ++i) {
      if (i == k || pieces_[i].empty()) continue;
      int lo = std::max(s, pieces_[i].s);
      int hi = std::min(t, pieces_[i].t);
      if (lo <= hi) acc += value(i, lo, hi);
    }
    return acc;
  }

  void grant(int k, int s, int t) {
    for (int i = 0; i < n_; ++i) {
      if (i == k || pieces_[i].empty()) continue;
      if (pieces_[i].s >= s) {
        pieces_[i] = Piece{};  // fully displaced
      } else if (pieces_[i].t >= s) {
        pieces_[i].t = s - 1;  // keep the prefix
      }
    }
    pieces_[k] = Piece::range(s, t);
    for (int j = s; j <= t; ++j) ever_owned_[k][j] = 1;
  }

  Rational owned_sum() const {
    Rational acc = 0;
    for (int i = 0; i < n_; ++i) acc += owned(i);
    return acc;
  }

  Rational ever_owned_sum() const {
    Rational acc = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 1; j <= m_; ++j) {
        if (ever_owned_[i][j]) acc += D_.values[i][j - 1];
      }
    }
    return acc;
  }

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& piece(int i) const { return pieces_[i]; }

 private:
  const DiscreteInstance& D_;
  int n_, m_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<char>> ever_owned_;
  std::vector<std::vector<Rational>> prefix_;
};

}  // namespace

ApproxDiscreteResult approx_util_discrete(const DiscreteInstance& D, bool record_trace) {
  const int n = D.n();
  const int m = D.m();
  for (const auto& row : D.values) {
    if (static_cast<int>(row.size()) != m) throw ValidationError("ragged value matrix");
    for (const Rational& v : row) {
      if (v < 0) throw ValidationError("negative item value");
    }
  }

  GrantState state(D);
  // Each (k, s, t) may be granted at most once; without this memo an
  // all-zero region would satisfy the >= 0 condition forever.
  std::vector<char> granted(static_cast<size_t>(n) * m * m, 0);
  auto granted_at = [&](int k, int s, int t) -> char& {
    return granted[(static_cast<size_t>(k) * m + (s - 1)) * m + (t - 1)];
  };

  ApproxDiscreteResult result;
  for (int t = 1; t <= m; ++t) {
    while (true) {
      int best_k = -1, best_s = -1;
      Rational best_gain;
      for (int k = 0; k < n; ++k) {
        for (int s = 1; s <= t; ++s) {
          if (granted_at(k, s, t)) continue;
          Rational gain =
              state.value(k, s, t) - 2 * (state.owned(k) + state.displaced_others(k, s, t));
          if (gain < 0) continue;
          if (best_k < 0 || gain > best_gain) {
            best_k = k;
            best_s = s;
            best_gain = gain;
          }
        }
      }
      if (best_k < 0) break;
      granted_at(best_k, best_s, t) = 1;
      ApproxTraceStep step;
      if (record_trace) {
        step.t = t;
        step.player = best_k;
        step.s = best_s;
        step.granted_value = state.value(best_k, best_s, t);
        step.displaced_own = state.owned(best_k);
        step.displaced_others = state.displaced_others(best_k, best_s, t);
      }
      state.grant(best_k, best_s, t);
      if (record_trace) {
        step.owned_sum = state.owned_sum();
        step.ever_owned_sum = state.ever_owned_sum();
        result.trace.push_back(std::move(step));
      }
    }
  }

  result.division.pieces = state.pieces();
  result.report = welfare_discrete(D, result.division);
  return result;
}

ApproxContinuousResult approx_util(const CakeInstance& instance, const Rational& eps,
                                   bool record_trace) {
  CutSet C = run_discretization(instance, eps);
  DiscreteInstance D = to_discrete(instance, C);
  ApproxDiscreteResult discrete = approx_util_discrete(D, record_trace);
  ApproxContinuousResult result;
  result.division = lift_division(discrete.division, C, instance.n());
  result.report = welfare(instance, result.division);
  result.trace = std::move(discrete.trace);
  return result;
}

}  // namespace fairslice
