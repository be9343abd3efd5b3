#pragma once

#include "fairslice/division.hpp"

#include <functional>

namespace fairslice {

enum class Objective { Utilitarian, Egalitarian };

// Number of discrete divisions allocating all m items as consecutive blocks
// to distinct players: sum over k of C(m-1,k-1) * n!/(n-k)!.
BigInt count_divisions(int n, int m);

// Streams every valid division exactly once (all items allocated, remaining
// players Empty). Throws GuardExceeded when the count exceeds the guard.
void enumerate_divisions(int n, int m,
                         const std::function<void(const DiscreteDivision&)>& visit,
                         const BigInt& guard = BigInt(10'000'000));

struct BruteForceResult {
  WelfareReport report;
  DiscreteDivision division;
};

// Exhaustive reference optimum; the trust anchor for every derived value.
// Ties broken by enumeration order.
BruteForceResult brute_force(const DiscreteInstance& D, Objective objective,
                             const BigInt& guard = BigInt(10'000'000));

}  // namespace fairslice
