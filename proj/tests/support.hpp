#pragma once

#include "specguard/convex.hpp"
#include "specguard/geom.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace testsup {

using namespace specguard;

/// SplitMix64: tiny deterministic generator for property tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return (next() >> 11) * 0x1.0p-53; }
};

inline Rat rat(Rng& rng, std::int64_t num_range = 20, std::int64_t den_range = 8) {
  std::int64_t d = rng.range(1, den_range);
  return Rat(rng.range(-num_range, num_range), d);
}

inline Point point(Rng& rng, std::int64_t num_range = 20, std::int64_t den_range = 8) {
  return Point(rat(rng, num_range, den_range), rat(rng, num_range, den_range));
}

/// Random convex cell: convex hull of a handful of random rational points.
inline ConvexCell convex_cell(Rng& rng, int npts = 8) {
  std::vector<Point> pts;
  for (int i = 0; i < npts; ++i) pts.push_back(point(rng));
  // Andrew monotone chain with exact predicates
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto build = [&](std::vector<Point>& out, auto begin, auto end) {
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 &&
             orientation(out[out.size() - 2], out.back(), *it) != Orientation::Left)
        out.pop_back();
      out.push_back(*it);
    }
  };
  std::vector<Point> lower, upper;
  build(lower, pts.begin(), pts.end());
  build(upper, pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) {  // degenerate draw: fall back to a triangle
    lower = {Point(0, 0), Point(1, 0), Point(0, 1)};
  }
  return make_cell(lower);
}

}  // namespace testsup
