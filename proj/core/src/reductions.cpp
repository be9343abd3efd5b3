#include "fairslice/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fairslice {

namespace {

// An interval of the unscaled construction cake together with the value the
// player assigns to it.
struct ValuedInterval {
  Rational lo, hi, value;
};

// Rescales a player built on [0, length] to a normalized valuation on [0,1].
PiecewiseConstantValuation scale_player(const std::vector<ValuedInterval>& intervals,
                                        const Rational& length) {
  std::vector<Segment> segments;
  for (const ValuedInterval& iv : intervals) {
    segments.push_back({iv.lo / length, iv.hi / length, iv.value * length / (iv.hi - iv.lo)});
  }
  auto v = PiecewiseConstantValuation::from_segments(std::move(segments));
  if (v.total() != 1) {
    throw std::logic_error("reduction player total value is not 1");
  }
  return v;
}

CutSet scaled_grid(std::vector<Rational> points, const Rational& length) {
  for (Rational& p : points) p /= length;
  CutSet grid;
  grid.points = std::move(points);
  grid.epsilon = 0;
  return grid;
}

}  // namespace

int McspInstance::total_segments() const {
  int total = 0;
  for (const auto& family : families) total += static_cast<int>(family.size());
  return total;
}

ReductionOutput from_3dm(const ThreeDMInstance& inst) {
  const int q = inst.q;
  const int E = static_cast<int>(inst.triples.size());
  if (q < 1 || E < 1) throw ValidationError("3DM instance needs q >= 1 and at least one triple");
  std::vector<int> mx(q + 1, 0), my(q + 1, 0), mz(q + 1, 0);
  for (const auto& t : inst.triples) {
    for (int c = 0; c < 3; ++c) {
      if (t[c] < 1 || t[c] > q) throw ValidationError("triple element out of range");
    }
    ++mx[t[0]];
    ++my[t[1]];
    ++mz[t[2]];
  }
  for (int e = 1; e <= q; ++e) {
    if (mx[e] == 0 || my[e] == 0 || mz[e] == 0) {
      throw ValidationError("every ground element must occur in at least one triple");
    }
  }

  const Rational length = 2 * E;
  auto section = [](int i) { return Rational(2 * (i - 1)); };  // i is 1-based
  const Rational quarter(1, 4), half(1, 2), three_quarters(3, 4);
  const Rational f65(6, 5), f75(7, 5), f85(8, 5), f95(9, 5);

  ReductionOutput out;
  auto add_filler = [&](std::vector<ValuedInterval>& ivs, int occurrences) {
    if (occurrences == E) return;
    Rational v = Rational(E - occurrences, 2 * E * E);
    for (int j = 1; j <= E; ++j) {
      ivs.push_back({section(j) + f65, section(j) + f75, v});
      ivs.push_back({section(j) + f85, section(j) + f95, v});
    }
  };

  // Triplet players, one per z.
  for (int z = 1; z <= q; ++z) {
    std::vector<ValuedInterval> ivs;
    for (int i = 1; i <= E; ++i) {
      if (inst.triples[i - 1][2] != z) continue;
      ivs.push_back({section(i), section(i) + quarter, Rational(1, 2 * E)});
      ivs.push_back({section(i) + three_quarters, section(i) + 1, Rational(1, 2 * E)});
    }
    add_filler(ivs, mz[z]);
    out.cake.players.push_back(scale_player(ivs, length));
    out.cake.names.push_back("z" + std::to_string(z));
  }
  // Ground-set players: m_x - 1 copies per x, m_y - 1 per y.
  for (int x = 1; x <= q; ++x) {
    std::vector<ValuedInterval> ivs;
    for (int i = 1; i <= E; ++i) {
      if (inst.triples[i - 1][0] != x) continue;
      ivs.push_back({section(i) + quarter, section(i) + half, Rational(1, E)});
    }
    add_filler(ivs, mx[x]);
    for (int c = 1; c < mx[x]; ++c) {
      out.cake.players.push_back(scale_player(ivs, length));
      out.cake.names.push_back("x" + std::to_string(x) + "#" + std::to_string(c));
    }
  }
  for (int y = 1; y <= q; ++y) {
    std::vector<ValuedInterval> ivs;
    for (int i = 1; i <= E; ++i) {
      if (inst.triples[i - 1][1] != y) continue;
      ivs.push_back({section(i) + half, section(i) + three_quarters, Rational(1, E)});
    }
    add_filler(ivs, my[y]);
    for (int c = 1; c < my[y]; ++c) {
      out.cake.players.push_back(scale_player(ivs, length));
      out.cake.names.push_back("y" + std::to_string(y) + "#" + std::to_string(c));
    }
  }
  // Three separation players per section.
  for (int i = 1; i <= E; ++i) {
    out.cake.players.push_back(scale_player({{section(i) + 1, section(i) + f65, 1}}, length));
    out.cake.names.push_back("s" + std::to_string(3 * i - 2));
    out.cake.players.push_back(scale_player({{section(i) + f75, section(i) + f85, 1}}, length));
    out.cake.names.push_back("s" + std::to_string(3 * i - 1));
    out.cake.players.push_back(scale_player({{section(i) + f95, section(i) + 2, 1}}, length));
    out.cake.names.push_back("s" + std::to_string(3 * i));
  }

  std::vector<Rational> points;
  const Rational offsets[] = {0, quarter, half, three_quarters, 1, f65, f75, f85, f95};
  for (int i = 1; i <= E; ++i) {
    for (const Rational& o : offsets) points.push_back(section(i) + o);
  }
  points.push_back(length);
  out.grid = scaled_grid(std::move(points), length);
  out.discrete = to_discrete(out.cake, out.grid);
  out.bound = Rational(1, E);
  return out;
}

ReductionOutput from_mcsp(const McspInstance& inst) {
  const int n = static_cast<int>(inst.families.size());
  const int m = inst.m;
  if (n < 1 || m < 1) throw ValidationError("MCSP instance needs m >= 1 and a family");
  int sumA = 0;
  for (const auto& family : inst.families) {
    if (static_cast<int>(family.size()) < 2) {
      throw ValidationError("every family needs at least two segments");
    }
    for (const McspSegment& s : family) {
      if (s.begin < 1 || s.end > m || s.begin > s.end) {
        throw ValidationError("segment out of range");
      }
    }
    sumA += static_cast<int>(family.size());
  }
  const Rational length = m + 2 * sumA - 2 * n;
  const Rational third(1, 3);

  ReductionOutput out;
  int comp_offset = m;  // C_i for the current family
  for (int i = 0; i < n; ++i) {
    const auto& family = inst.families[i];
    const int a = static_cast<int>(family.size());
    auto p_interval = [&](int r) {  // r-th shared compensation interval, 1-based
      return std::pair<Rational, Rational>(Rational(comp_offset + 2 * r - 1),
                                           Rational(comp_offset + 2 * r));
    };
    auto q_interval = [&](int j) {
      return std::pair<Rational, Rational>(Rational(comp_offset + 2 * j - 2),
                                           Rational(comp_offset + 2 * j - 1));
    };
    for (int j = 1; j <= a; ++j) {
      std::vector<ValuedInterval> ivs;
      ivs.push_back({Rational(family[j - 1].begin - 1), Rational(family[j - 1].end), third});
      if (a == 2) {
        // A two-segment family has a single shared compensation interval;
        // the remaining third sits on the separator's interval so that no
        // connected piece reaches more than 1/3 here without consuming it.
        auto [plo, phi] = p_interval(1);
        auto [qlo, qhi] = q_interval(1);
        ivs.push_back({plo, phi, third});
        ivs.push_back({qlo, qhi, third});
      } else {
        int first = (j == 1) ? 1 : (j == a ? a - 2 : j - 1);
        for (int r = first; r <= first + 1; ++r) {
          auto [plo, phi] = p_interval(r);
          ivs.push_back({plo, phi, third});
        }
      }
      out.cake.players.push_back(scale_player(ivs, length));
      out.cake.names.push_back("p" + std::to_string(i + 1) + "." + std::to_string(j));
    }
    for (int j = 1; j <= a - 1; ++j) {
      auto [qlo, qhi] = q_interval(j);
      out.cake.players.push_back(scale_player({{qlo, qhi, 1}}, length));
      out.cake.names.push_back("q" + std::to_string(i + 1) + "." + std::to_string(j));
    }
    comp_offset += 2 * (a - 1);
  }

  std::vector<Rational> points;
  for (int p = 0; length >= p; ++p) points.push_back(p);
  out.grid = scaled_grid(std::move(points), length);
  out.discrete = to_discrete(out.cake, out.grid);
  out.bound = Rational(4 * sumA, 3) - n;
  return out;
}

bool solve_3dm(const ThreeDMInstance& inst, int max_triples) {
  const int E = static_cast<int>(inst.triples.size());
  if (E > max_triples) throw GuardExceeded("3DM instance too large for exhaustive search");
  if (inst.q > E) return false;
  std::vector<int> choice(inst.q);
  // enumerate subsets of size q via odometer over triple indices
  for (int i = 0; i < inst.q; ++i) choice[i] = i;
  while (true) {
    std::set<int> xs, ys, zs;
    for (int c : choice) {
      xs.insert(inst.triples[c][0]);
      ys.insert(inst.triples[c][1]);
      zs.insert(inst.triples[c][2]);
    }
    if (static_cast<int>(xs.size()) == inst.q && static_cast<int>(ys.size()) == inst.q &&
        static_cast<int>(zs.size()) == inst.q) {
      return true;
    }
    int pos = inst.q - 1;
    while (pos >= 0 && choice[pos] == E - inst.q + pos) --pos;
    if (pos < 0) return false;
    ++choice[pos];
    for (int i = pos + 1; i < inst.q; ++i) choice[i] = choice[i - 1] + 1;
  }
}

namespace {

bool mcsp_recurse(const McspInstance& inst, size_t family, std::vector<char>& taken) {
  if (family == inst.families.size()) return true;
  for (const McspSegment& s : inst.families[family]) {
    bool free = true;
    for (int j = s.begin; j <= s.end && free; ++j) free = !taken[j];
    if (!free) continue;
    for (int j = s.begin; j <= s.end; ++j) taken[j] = 1;
    if (mcsp_recurse(inst, family + 1, taken)) return true;
    for (int j = s.begin; j <= s.end; ++j) taken[j] = 0;
  }
  return false;
}

}  // namespace

bool solve_mcsp(const McspInstance& inst, int max_total_segments) {
  if (inst.total_segments() > max_total_segments) {
    throw GuardExceeded("MCSP instance too large for exhaustive search");
  }
  for (const auto& family : inst.families) {
    if (family.empty()) return false;
  }
  std::vector<char> taken(inst.m + 1, 0);
  return mcsp_recurse(inst, 0, taken);
}

McspInstance mcsp_from_discrete_egal(const DiscreteInstance& D, const Rational& B) {
  McspInstance out;
  out.m = D.m();
  for (int i = 0; i < D.n(); ++i) {
    std::vector<McspSegment> family;
    for (int s = 1; s <= D.m(); ++s) {
      Rational acc = 0;
      for (int t = s; t <= D.m(); ++t) {
        acc += D.values[i][t - 1];
        if (acc >= B) family.push_back({s, t});
      }
    }
    out.families.push_back(std::move(family));
  }
  return out;
}

}  // namespace fairslice
