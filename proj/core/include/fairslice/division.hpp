#pragma once

#include "fairslice/rational.hpp"
#include "fairslice/valuation.hpp"

#include <string>
#include <vector>

namespace fairslice {

// n-1 sorted cuts plus the permutation assigning the resulting intervals:
// order[j] is the (0-based) player receiving the j-th interval from the left.
struct ConnectedDivision {
  std::vector<Rational> cuts;
  std::vector<int> order;

  int n() const { return static_cast<int>(order.size()); }
};

// A consecutive range of items, 1-based inclusive. s == 0 means Empty.
struct Piece {
  int s = 0;
  int t = 0;

  bool empty() const { return s == 0; }
  static Piece range(int s, int t) { return Piece{s, t}; }
};

struct DiscreteDivision {
  std::vector<Piece> pieces;  // one per player

  int n() const { return static_cast<int>(pieces.size()); }
};

// n x m matrix of nonnegative item values: values[i][j] is player i's value
// for item j+1.
struct DiscreteInstance {
  std::vector<std::vector<Rational>> values;

  int n() const { return static_cast<int>(values.size()); }
  int m() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
};

struct WelfareReport {
  std::vector<Rational> utilities;
  Rational utilitarian;  // sum of utilities
  Rational egalitarian;  // min utility

  static WelfareReport from_utilities(std::vector<Rational> utilities);
};

// Utility of the player order[j] is the value of the j-th interval between
// consecutive cuts (with implicit boundaries 0 and 1).
WelfareReport welfare(const CakeInstance& instance, const ConnectedDivision& d);

WelfareReport welfare_discrete(const DiscreteInstance& D, const DiscreteDivision& d);

// Diagnostics: every broken invariant as a human-readable message. Empty
// result means the division is valid.
std::vector<std::string> validate_division(const ConnectedDivision& d, int n);
std::vector<std::string> validate_division(const DiscreteDivision& d, int n, int m);

}  // namespace fairslice
