#include "fairslice/valuation.hpp"

#include <algorithm>

namespace fairslice {

PiecewiseConstantValuation PiecewiseConstantValuation::from_segments(
    std::vector<Segment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.start < b.start; });
  std::vector<Segment> out;
  Rational cursor = 0;
  for (const Segment& s : segments) {
    if (s.start < 0 || s.end > 1 || s.start >= s.end) {
      throw ValidationError("segment endpoints must satisfy 0 <= start < end <= 1");
    }
    if (s.density < 0) throw ValidationError("negative density");
    if (s.start < cursor) throw ValidationError("overlapping segments");
    if (s.start > cursor) out.push_back({cursor, s.start, 0});
    out.push_back(s);
    cursor = s.end;
  }
  if (cursor < 1) out.push_back({cursor, 1, 0});
  // merge adjacent pieces of equal density
  std::vector<Segment> merged;
  for (const Segment& s : out) {
    if (!merged.empty() && merged.back().density == s.density) {
      merged.back().end = s.end;
    } else {
      merged.push_back(s);
    }
  }
  PiecewiseConstantValuation v;
  v.segments_ = std::move(merged);
  return v;
}

PiecewiseConstantValuation PiecewiseConstantValuation::uniform(const Rational& d) {
  return from_segments({{0, 1, d}});
}

Rational PiecewiseConstantValuation::total() const { return eval(0, 1); }

Rational PiecewiseConstantValuation::eval(const Rational& a, const Rational& b) const {
  if (a < 0 || b > 1 || a > b) throw ValidationError("eval endpoints out of range");
  Rational acc = 0;
  for (const Segment& s : segments_) {
    Rational lo = std::max(a, s.start);
    Rational hi = std::min(b, s.end);
    if (lo < hi) acc += s.density * (hi - lo);
  }
  return acc;
}

std::optional<Rational> PiecewiseConstantValuation::inv_eval(const Rational& a,
                                                             const Rational& x) const {
  if (a < 0 || a > 1) throw ValidationError("inv_eval start out of range");
  if (x < 0) throw ValidationError("inv_eval target must be nonnegative");
  if (x == 0) return a;
  Rational rem = x;
  for (const Segment& s : segments_) {
    if (s.end <= a) continue;
    Rational lo = std::max(a, s.start);
    Rational piece = s.density * (s.end - lo);
    if (s.density > 0 && piece >= rem) {
      return lo + rem / s.density;
    }
    rem -= piece;
  }
  return std::nullopt;
}

PiecewiseConstantValuation normalize(const PiecewiseConstantValuation& v) {
  Rational total = v.total();
  if (total == 0) throw ValidationError("cannot normalize an identically-zero valuation");
  std::vector<Segment> scaled = v.segments();
  for (Segment& s : scaled) s.density /= total;
  return PiecewiseConstantValuation::from_segments(std::move(scaled));
}

}  // namespace fairslice
