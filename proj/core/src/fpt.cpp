#include "fairslice/fpt.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace fairslice {

namespace {

void check_player_bound(int n, int max_players) {
  if (n > max_players) {
    throw GuardExceeded("instance has " + std::to_string(n) +
                        " players, subset DP bound is " + std::to_string(max_players));
  }
}

}  // namespace

namespace {

// Subset DP over items; Val is int64_t when the values fit a common small
// denominator, otherwise Rational.
template <typename Val>
DiscreteOptResult util_dp(const DiscreteInstance& D,
                          const std::vector<std::vector<Val>>& vals) {
  const int n = D.n();
  const int m = D.m();
  const int full = (1 << n) - 1;
  const size_t cols = static_cast<size_t>(m) + 1;
  // u[(mask,k)][j]: best total utility dividing items 1..j among `mask`,
  // item j owned by k. best[(mask)][j]: max over k.
  std::vector<Val> u(static_cast<size_t>(full + 1) * n * cols);
  std::vector<char> u_valid(u.size(), 0);
  std::vector<Val> best(static_cast<size_t>(full + 1) * cols);
  std::vector<char> best_valid(best.size(), 0);
  auto uidx = [&](int mask, int k, int j) {
    return (static_cast<size_t>(mask) * n + k) * cols + j;
  };
  auto bidx = [&](int mask, int j) { return static_cast<size_t>(mask) * cols + j; };

  for (int j = 1; j <= m; ++j) {
    for (int mask = 1; mask <= full; ++mask) {
      for (int k = 0; k < n; ++k) {
        if (!(mask & (1 << k))) continue;
        const int sub = mask ^ (1 << k);
        bool valid = false;
        Val base{};
        if (j == 1) {
          if (sub == 0) {
            valid = true;
            base = 0;
          }
        } else {
          if (u_valid[uidx(mask, k, j - 1)]) {
            valid = true;
            base = u[uidx(mask, k, j - 1)];
          }
          if (sub != 0 && best_valid[bidx(sub, j - 1)]) {
            const Val& other = best[bidx(sub, j - 1)];
            if (!valid || other > base) {
              valid = true;
              base = other;
            }
          }
        }
        if (valid) {
          size_t idx = uidx(mask, k, j);
          u[idx] = base + vals[k][j - 1];
          u_valid[idx] = 1;
          size_t b = bidx(mask, j);
          if (!best_valid[b] || u[idx] > best[b]) {
            best[b] = u[idx];
            best_valid[b] = 1;
          }
        }
      }
    }
  }

  int arg_mask = -1, arg_k = -1;
  Val opt{};
  for (int mask = 1; mask <= full; ++mask) {
    for (int k = 0; k < n; ++k) {
      if (!(mask & (1 << k))) continue;
      if (!u_valid[uidx(mask, k, m)]) continue;
      if (arg_mask < 0 || u[uidx(mask, k, m)] > opt) {
        opt = u[uidx(mask, k, m)];
        arg_mask = mask;
        arg_k = k;
      }
    }
  }

  DiscreteOptResult result;
  result.division.pieces.assign(n, Piece{});
  int mask = arg_mask, k = arg_k, j = m, piece_end = m;
  while (j >= 1) {
    if (j == 1) {
      result.division.pieces[k] = Piece::range(1, piece_end);
      break;
    }
    const int sub = mask ^ (1 << k);
    const Val target = u[uidx(mask, k, j)] - vals[k][j - 1];
    if (u_valid[uidx(mask, k, j - 1)] && u[uidx(mask, k, j - 1)] == target) {
      --j;  // extend k's piece leftward
      continue;
    }
    // switch: k's piece starts at item j
    result.division.pieces[k] = Piece::range(j, piece_end);
    int next_k = -1;
    for (int i = 0; i < n; ++i) {
      if ((sub & (1 << i)) && u_valid[uidx(sub, i, j - 1)] &&
          u[uidx(sub, i, j - 1)] == target) {
        next_k = i;
        break;
      }
    }
    mask = sub;
    k = next_k;
    --j;
    piece_end = j;
  }
  result.report = welfare_discrete(D, result.division);
  return result;
}

}  // namespace

DiscreteOptResult fpt_util_discrete(const DiscreteInstance& D, int max_players) {
  const int n = D.n();
  const int m = D.m();
  if (n < 1 || m < 1) throw ValidationError("empty discrete instance");
  check_player_bound(n, max_players);

  BigInt denom = 1;
  BigInt total = 0;
  for (const auto& row : D.values) {
    for (const Rational& v : row) {
      if (v < 0) throw ValidationError("negative item value");
      denom = lcm(denom, denominator(v));
    }
  }
  std::vector<std::vector<BigInt>> scaled(n, std::vector<BigInt>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const Rational& v = D.values[i][j];
      scaled[i][j] = numerator(v) * (denom / denominator(v));
      total += scaled[i][j];
    }
  }
  if (total < (BigInt(1) << 62)) {
    std::vector<std::vector<int64_t>> v64(n, std::vector<int64_t>(m));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) v64[i][j] = static_cast<int64_t>(scaled[i][j]);
    }
    return util_dp<int64_t>(D, v64);
  }
  return util_dp<Rational>(D, D.values);
}

ContinuousOptResult fpt_util(const CakeInstance& instance, const Rational& eps,
                             int max_players) {
  if (eps <= 0 || eps > 1) throw ValidationError("eps must lie in (0,1]");
  const int n = instance.n();
  check_player_bound(n, max_players);
  Rational fine_eps = (n == 1) ? eps : eps / (2 * (n - 1));
  CutSet C = run_discretization(instance, fine_eps);
  DiscreteInstance D = to_discrete(instance, C);
  DiscreteOptResult discrete = fpt_util_discrete(D, max_players);
  ContinuousOptResult result;
  result.division = lift_division(discrete.division, C, n);
  result.report = welfare(instance, result.division);
  return result;
}

std::optional<ConnectedDivision> egal_feasible(const CakeInstance& instance,
                                               const Rational& B) {
  if (B < 0 || B > 1) throw ValidationError("egalitarian probe must lie in [0,1]");
  const int n = instance.n();
  if (n > 30) throw GuardExceeded("too many players for the subset cut vector");
  const int full = (1 << n) - 1;
  // C[mask]: leftmost point a such that [0,a] can give every player of
  // `mask` utility B; unset optional means infeasible (infinity).
  std::vector<std::optional<Rational>> C(full + 1);
  std::vector<int> last_player(full + 1, -1);
  C[0] = Rational(0);
  for (int mask = 1; mask <= full; ++mask) {
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1 << i))) continue;
      const auto& prev = C[mask ^ (1 << i)];
      if (!prev) continue;
      auto b = instance.players[i].inv_eval(*prev, B);
      if (!b) continue;
      if (!C[mask] || *b < *C[mask]) {
        C[mask] = *b;
        last_player[mask] = i;
      }
    }
  }
  if (!C[full] || *C[full] > 1) return std::nullopt;

  ConnectedDivision d;
  d.order.assign(n, -1);
  int mask = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    int i = (pos == 0) ? static_cast<int>(std::countr_zero(static_cast<unsigned>(mask)))
                       : last_player[mask];
    d.order[pos] = i;
    mask ^= (1 << i);
  }
  // The cut left of position pos is C of the set of the first pos players.
  d.cuts.assign(std::max(0, n - 1), Rational(0));
  int prefix_mask = 0;
  for (int pos = 0; pos + 1 < n; ++pos) {
    prefix_mask |= (1 << d.order[pos]);
    d.cuts[pos] = *C[prefix_mask];
  }
  return d;
}

EgalSearchResult fpt_egal(const CakeInstance& instance, const Rational& eps,
                          int max_players) {
  if (eps <= 0 || eps >= 1) throw ValidationError("eps must lie in (0,1)");
  const int n = instance.n();
  check_player_bound(n, max_players);

  int iterations = 0;
  for (Rational pow = 1; pow < Rational(n) / eps; pow *= 2) ++iterations;

  Rational lo = 0, hi = 1;
  ConnectedDivision witness = *egal_feasible(instance, lo);
  for (int it = 0; it < iterations; ++it) {
    Rational mid = (lo + hi) / 2;
    if (auto d = egal_feasible(instance, mid)) {
      lo = mid;
      witness = std::move(*d);
    } else {
      hi = mid;
    }
  }
  return EgalSearchResult{lo, std::move(witness), hi};
}

namespace {

// Max-min subset DP over scaled integer values. INF marks the empty player
// set, which is served trivially.
template <typename Int>
DiscreteEgalResult egal_dp(const DiscreteInstance& D, const std::vector<std::vector<Int>>& prefix,
                           const Int& inf, const BigInt& denom) {
  const int n = D.n();
  const int m = D.m();
  const int full = (1 << n) - 1;
  const size_t cols = static_cast<size_t>(m) + 1;

  std::vector<Int> g(static_cast<size_t>(full + 1) * cols, Int(0));
  std::vector<int8_t> bp_k(g.size(), -1);
  std::vector<int32_t> bp_s(g.size(), 0);
  auto gi = [&](int mask, int j) { return static_cast<size_t>(mask) * cols + j; };
  for (int j = 0; j <= m; ++j) g[gi(0, j)] = inf;

  std::vector<Int> cand(cols);
  std::vector<int8_t> cand_k(cols);
  std::vector<int32_t> cand_s(cols);
  for (int mask = 1; mask <= full; ++mask) {
    std::fill(cand.begin(), cand.end(), Int(-1));
    for (int k = 0; k < n; ++k) {
      if (!(mask & (1 << k))) continue;
      const int sub = mask ^ (1 << k);
      const auto& pk = prefix[k];
      // f(s) = g[sub][s-1] is non-decreasing in s, h(s) = v_k(s..j) is
      // non-increasing; the max of their min sits at the crossing, which
      // moves right as j grows.
      int s_star = 0;
      for (int j = 1; j <= m; ++j) {
        auto f = [&](int s) -> const Int& { return g[gi(sub, s - 1)]; };
        auto h = [&](int s) { return pk[j] - pk[s - 1]; };
        while (s_star + 1 <= j && f(s_star + 1) <= h(s_star + 1)) ++s_star;
        if (s_star >= 1 && f(s_star) > cand[j]) {
          cand[j] = f(s_star);
          cand_k[j] = static_cast<int8_t>(k);
          cand_s[j] = s_star;
        }
        if (s_star < j) {
          Int c = h(s_star + 1);
          if (c > cand[j]) {
            cand[j] = c;
            cand_k[j] = static_cast<int8_t>(k);
            cand_s[j] = s_star + 1;
          }
        }
      }
    }
    for (int j = 1; j <= m; ++j) {
      size_t idx = gi(mask, j);
      if (g[idx - 1] >= cand[j]) {
        g[idx] = g[idx - 1];  // leave item j unallocated
      } else {
        g[idx] = cand[j];
        bp_k[idx] = cand_k[j];
        bp_s[idx] = cand_s[j];
      }
    }
  }

  DiscreteEgalResult result;
  result.division.pieces.assign(n, Piece{});
  int mask = full, j = m;
  while (mask != 0 && j > 0) {
    size_t idx = gi(mask, j);
    if (bp_k[idx] < 0) {
      --j;
      continue;
    }
    int k = bp_k[idx];
    int s = bp_s[idx];
    result.division.pieces[k] = Piece::range(s, j);
    mask ^= (1 << k);
    j = s - 1;
  }
  result.bound = Rational(BigInt(g[gi(full, m)]), denom);
  return result;
}

}  // namespace

DiscreteEgalResult egal_exact_discrete(const DiscreteInstance& D, int max_players) {
  const int n = D.n();
  const int m = D.m();
  if (n < 1 || m < 1) throw ValidationError("empty discrete instance");
  check_player_bound(n, max_players);

  // Rescale to a common denominator so the DP compares integers.
  BigInt denom = 1;
  for (const auto& row : D.values) {
    for (const Rational& v : row) {
      if (v < 0) throw ValidationError("negative item value");
      denom = lcm(denom, denominator(v));
    }
  }
  std::vector<std::vector<BigInt>> prefix(n, std::vector<BigInt>(m + 1, BigInt(0)));
  BigInt total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const Rational& v = D.values[i][j - 1];
      prefix[i][j] = prefix[i][j - 1] + numerator(v) * (denom / denominator(v));
    }
    total += prefix[i][m];
  }

  if (total + 1 < (BigInt(1) << 62)) {
    std::vector<std::vector<int64_t>> p64(n, std::vector<int64_t>(m + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= m; ++j) p64[i][j] = static_cast<int64_t>(prefix[i][j]);
    }
    return egal_dp<int64_t>(D, p64, static_cast<int64_t>(total + 1), denom);
  }
  return egal_dp<BigInt>(D, prefix, total + 1, denom);
}

}  // namespace fairslice
