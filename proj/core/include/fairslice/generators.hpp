#pragma once

#include "fairslice/division.hpp"
#include "fairslice/valuation.hpp"

#include <cstdint>

namespace fairslice {

// Deterministic seeded random cake instance with rational breakpoints,
// normalized valuations. With piecewise_uniform, each player's nonzero
// density is a single constant.
CakeInstance gen_random(int n, int segments_per_player, bool piecewise_uniform,
                        uint64_t seed);

// Deterministic random discrete instance with integer values in
// [0, max_value].
DiscreteInstance gen_random_discrete(int n, int m, int max_value, uint64_t seed);

// Deterministic random connected division for an n-player cake.
ConnectedDivision gen_random_division(int n, uint64_t seed);

}  // namespace fairslice
