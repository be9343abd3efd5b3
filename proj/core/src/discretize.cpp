#include "fairslice/discretize.hpp"

#include <algorithm>

namespace fairslice {

CutSet run_discretization(const CakeInstance& instance, const Rational& eps) {
  if (eps <= 0) throw ValidationError("discretization precision must be positive");
  CutSet C;
  C.epsilon = eps;
  C.points.push_back(0);
  Rational a = 0;
  while (true) {
    bool remainder_exceeds = false;
    for (const auto& v : instance.players) {
      if (v.eval(a, 1) > eps) {
        remainder_exceeds = true;
        break;
      }
    }
    if (!remainder_exceeds) break;
    bool have_b = false;
    Rational b;
    for (const auto& v : instance.players) {
      auto bi = v.inv_eval(a, eps);
      if (bi && (!have_b || *bi < b)) {
        b = *bi;
        have_b = true;
      }
    }
    // The loop condition guarantees some player still has value > eps left.
    C.points.push_back(b);
    a = b;
  }
  if (C.points.back() != 1) C.points.push_back(1);
  return C;
}

DiscreteInstance to_discrete(const CakeInstance& instance, const CutSet& C) {
  DiscreteInstance D;
  D.values.resize(instance.n());
  for (int i = 0; i < instance.n(); ++i) {
    for (size_t j = 0; j + 1 < C.points.size(); ++j) {
      D.values[i].push_back(instance.players[i].eval(C.points[j], C.points[j + 1]));
    }
  }
  return D;
}

ConnectedDivision snap_division(const ConnectedDivision& d, const CutSet& C) {
  ConnectedDivision out = d;
  for (Rational& cut : out.cuts) {
    auto it = std::lower_bound(C.points.begin(), C.points.end(), cut);
    cut = *it;  // C ends at 1 >= any cut, so `it` is always valid
  }
  return out;
}

ConnectedDivision lift_division(const DiscreteDivision& d, const CutSet& C, int n) {
  auto problems = validate_division(d, n, C.items());
  if (!problems.empty()) throw ValidationError("malformed division: " + problems.front());

  std::vector<int> nonempty;
  for (int i = 0; i < n; ++i) {
    if (!d.pieces[i].empty()) nonempty.push_back(i);
  }
  std::sort(nonempty.begin(), nonempty.end(),
            [&](int a, int b) { return d.pieces[a].s < d.pieces[b].s; });

  ConnectedDivision out;
  for (int i = 0; i < n; ++i) {
    bool empty = d.pieces[i].empty();
    if (empty) out.order.push_back(i);
  }
  size_t empties = out.order.size();
  out.cuts.assign(empties, Rational(0));
  for (size_t r = 0; r < nonempty.size(); ++r) {
    out.order.push_back(nonempty[r]);
    if (r + 1 < nonempty.size()) {
      out.cuts.push_back(C.points[d.pieces[nonempty[r + 1]].s - 1]);
    }
  }
  if (nonempty.empty() && n > 0) {
    // Everyone is Empty; the division still has to partition the cake, so
    // hand it to the last player in the order.
    out.cuts.assign(n - 1, Rational(0));
  }
  return out;
}

}  // namespace fairslice
