#pragma once

#include "specguard/convex.hpp"
#include "specguard/polygon.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace specguard {

/// Region of the polygon visible from a query point; star-shaped from it.
struct VisibilityRegion {
  std::vector<Point> boundary;  // simple polygon, may contain collinear chains
  Rat area2() const { return specguard::area2(boundary); }
};

/// Closed visibility: grazing a reflex vertex or running along an edge counts.
/// Throws QueryOutsidePolygon when either endpoint is exterior.
bool segment_visible(const SimplePolygon& P, const Point& a, const Point& b);

/// Internal fast variant: both endpoints known to lie in the closed polygon.
bool segment_visible_unchecked(const SimplePolygon& P, const Point& a, const Point& b);

/// Sorted disjoint closed parameter intervals [t0,t1] (possibly degenerate)
/// of s visible from q. Precondition: q and s in the closed polygon.
std::vector<std::pair<Rat, Rat>> visible_portions_of_segment(const SimplePolygon& P,
                                                             const Point& q,
                                                             const Segment& s);

/// Maximal visible subsegments of edge e from q, in edge order.
std::vector<Segment> visible_portions_of_edge(const SimplePolygon& P, const Point& q, int e);

VisibilityRegion point_visibility(const SimplePolygon& P, const Point& q);

/// Memoizes visible_portions_of_segment per (q, segment); one context per
/// polygon. Not thread-safe: use one per worker thread.
class VisCache {
 public:
  explicit VisCache(const SimplePolygon& P) : P_(&P) {}
  const std::vector<std::pair<Rat, Rat>>& portions(const Point& q, const Segment& s);
  const SimplePolygon& polygon() const { return *P_; }

 private:
  struct Key {
    Point q;
    Segment s;
    bool operator==(const Key& o) const { return q == o.q && s == o.s; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_combine(hash_point(k.q),
                          hash_combine(hash_point(k.s.a), hash_point(k.s.b)));
    }
  };
  const SimplePolygon* P_;
  std::unordered_map<Key, std::vector<std::pair<Rat, Rat>>, KeyHash> cache_;
};

}  // namespace specguard
