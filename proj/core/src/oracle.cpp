#include "fairslice/oracle.hpp"

namespace fairslice {

namespace {

// Recurse over (next item, receiving player) keeping memory O(n+m): at each
// step the next unallocated item starts a block for some unused player, and
// the block extends to any end, with the tail still coverable.
void recurse(int n, int m, int next_item, std::vector<char>& used, DiscreteDivision& d,
             const std::function<void(const DiscreteDivision&)>& visit) {
  if (next_item > m) {
    visit(d);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    for (int t = next_item; t <= m; ++t) {
      d.pieces[i] = Piece::range(next_item, t);
      recurse(n, m, t + 1, used, d, visit);
    }
    d.pieces[i] = Piece{};
    used[i] = 0;
  }
}

}  // namespace

BigInt count_divisions(int n, int m) {
  BigInt total = 0;
  for (int k = 1; k <= std::min(n, m); ++k) {
    // C(m-1, k-1) compositions of m into k blocks, n!/(n-k)! ordered players
    BigInt comp = 1;
    for (int i = 1; i <= k - 1; ++i) comp = comp * (m - i) / i;
    BigInt arr = 1;
    for (int i = 0; i < k; ++i) arr *= (n - i);
    total += comp * arr;
  }
  return total;
}

void enumerate_divisions(int n, int m,
                         const std::function<void(const DiscreteDivision&)>& visit,
                         const BigInt& guard) {
  if (n < 1 || m < 1) throw ValidationError("need at least one player and one item");
  if (count_divisions(n, m) > guard) {
    throw GuardExceeded("too many divisions to enumerate for n=" + std::to_string(n) +
                        ", m=" + std::to_string(m));
  }
  DiscreteDivision d;
  d.pieces.assign(n, Piece{});
  std::vector<char> used(n, 0);
  recurse(n, m, 1, used, d, visit);
}

BruteForceResult brute_force(const DiscreteInstance& D, Objective objective,
                             const BigInt& guard) {
  BruteForceResult best;
  bool have = false;
  enumerate_divisions(D.n(), D.m(), [&](const DiscreteDivision& d) {
    WelfareReport r = welfare_discrete(D, d);
    const Rational& score = objective == Objective::Utilitarian ? r.utilitarian : r.egalitarian;
    const Rational& incumbent =
        objective == Objective::Utilitarian ? best.report.utilitarian : best.report.egalitarian;
    if (!have || score > incumbent) {
      best.report = std::move(r);
      best.division = d;
      have = true;
    }
  }, guard);
  return best;
}

}  // namespace fairslice
