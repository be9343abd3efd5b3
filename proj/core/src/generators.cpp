#include "fairslice/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fairslice {

CakeInstance gen_random(int n, int segments_per_player, bool piecewise_uniform,
                        uint64_t seed) {
  if (n < 1 || segments_per_player < 1) throw ValidationError("need n >= 1 and segments >= 1");
  std::mt19937_64 rng(seed);
  const int denom = 16 * segments_per_player;
  CakeInstance instance;
  for (int i = 0; i < n; ++i) {
    std::set<int> points;
    std::uniform_int_distribution<int> point_dist(1, denom - 1);
    while (static_cast<int>(points.size()) < segments_per_player - 1) {
      points.insert(point_dist(rng));
    }
    std::vector<int> bounds(points.begin(), points.end());
    bounds.insert(bounds.begin(), 0);
    bounds.push_back(denom);
    std::uniform_int_distribution<int> density_dist(0, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Segment> segments;
    bool any_positive = false;
    for (size_t j = 0; j + 1 < bounds.size(); ++j) {
      int d = piecewise_uniform ? coin(rng) : density_dist(rng);
      if (d > 0) any_positive = true;
      segments.push_back({Rational(bounds[j], denom), Rational(bounds[j + 1], denom),
                          Rational(d)});
    }
    if (!any_positive) segments[0].density = 1;
    instance.players.push_back(
        normalize(PiecewiseConstantValuation::from_segments(std::move(segments))));
  }
  return instance;
}

DiscreteInstance gen_random_discrete(int n, int m, int max_value, uint64_t seed) {
  if (n < 1 || m < 1) throw ValidationError("need n >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, max_value);
  DiscreteInstance D;
  D.values.assign(n, std::vector<Rational>(m));
  for (auto& row : D.values) {
    for (auto& v : row) v = dist(rng);
  }
  return D;
}

ConnectedDivision gen_random_division(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int denom = 64;
  std::uniform_int_distribution<int> cut_dist(0, denom);
  ConnectedDivision d;
  for (int i = 0; i + 1 < n; ++i) d.cuts.push_back(Rational(cut_dist(rng), denom));
  std::sort(d.cuts.begin(), d.cuts.end());
  d.order.resize(n);
  for (int i = 0; i < n; ++i) d.order[i] = i;
  std::shuffle(d.order.begin(), d.order.end(), rng);
  return d;
}

}  // namespace fairslice
