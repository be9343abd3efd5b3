#include "fairslice/division.hpp"

#include <algorithm>
#include <numeric>

namespace fairslice {

WelfareReport WelfareReport::from_utilities(std::vector<Rational> utilities) {
  WelfareReport r;
  r.utilities = std::move(utilities);
  r.utilitarian = 0;
  for (const Rational& u : r.utilities) r.utilitarian += u;
  r.egalitarian = r.utilities.empty() ? Rational(0)
                                      : *std::min_element(r.utilities.begin(), r.utilities.end());
  return r;
}

WelfareReport welfare(const CakeInstance& instance, const ConnectedDivision& d) {
  auto problems = validate_division(d, instance.n());
  if (!problems.empty()) throw ValidationError("malformed division: " + problems.front());
  std::vector<Rational> utilities(instance.n());
  Rational left = 0;
  for (int j = 0; j < instance.n(); ++j) {
    Rational right = (j + 1 < instance.n()) ? d.cuts[j] : Rational(1);
    utilities[d.order[j]] = instance.players[d.order[j]].eval(left, right);
    left = right;
  }
  return WelfareReport::from_utilities(std::move(utilities));
}

WelfareReport welfare_discrete(const DiscreteInstance& D, const DiscreteDivision& d) {
  auto problems = validate_division(d, D.n(), D.m());
  if (!problems.empty()) throw ValidationError("malformed division: " + problems.front());
  std::vector<Rational> utilities(D.n(), Rational(0));
  for (int i = 0; i < D.n(); ++i) {
    const Piece& p = d.pieces[i];
    if (p.empty()) continue;
    for (int j = p.s; j <= p.t; ++j) utilities[i] += D.values[i][j - 1];
  }
  return WelfareReport::from_utilities(std::move(utilities));
}

std::vector<std::string> validate_division(const ConnectedDivision& d, int n) {
  std::vector<std::string> out;
  if (static_cast<int>(d.order.size()) != n) out.push_back("order length differs from n");
  if (static_cast<int>(d.cuts.size()) != std::max(0, n - 1))
    out.push_back("expected n-1 cuts");
  for (size_t j = 0; j + 1 < d.cuts.size(); ++j) {
    if (d.cuts[j] > d.cuts[j + 1]) {
      out.push_back("cuts unsorted");
      break;
    }
  }
  for (const Rational& c : d.cuts) {
    if (c < 0 || c > 1) {
      out.push_back("cut outside [0,1]");
      break;
    }
  }
  std::vector<char> seen(std::max<size_t>(d.order.size(), n), 0);
  bool perm = true;
  for (int p : d.order) {
    if (p < 0 || p >= static_cast<int>(seen.size()) || seen[p]) {
      perm = false;
      break;
    }
    seen[p] = 1;
  }
  if (!perm) out.push_back("order is not a permutation");
  return out;
}

std::vector<std::string> validate_division(const DiscreteDivision& d, int n, int m) {
  std::vector<std::string> out;
  if (d.n() != n) out.push_back("piece count differs from n");
  std::vector<int> owner(m + 1, -1);
  for (int i = 0; i < d.n(); ++i) {
    const Piece& p = d.pieces[i];
    if (p.empty()) continue;
    if (p.s < 1 || p.t > m || p.s > p.t) {
      out.push_back("piece of player " + std::to_string(i + 1) + " out of range");
      continue;
    }
    for (int j = p.s; j <= p.t; ++j) {
      if (owner[j] >= 0) {
        out.push_back("overlap at item " + std::to_string(j));
      } else {
        owner[j] = i;
      }
    }
  }
  return out;
}

}  // namespace fairslice
