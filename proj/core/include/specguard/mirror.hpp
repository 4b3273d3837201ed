#pragma once

#include "specguard/algebraic.hpp"
#include "specguard/convex.hpp"
#include "specguard/visibility.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace specguard {

/// Window on a mirror edge through which a viewer sees reflections.
struct MirrorWindow {
  int edge = -1;
  Segment window;        // subsegment of the mirror edge
  Point virtual_source;  // viewer reflected across the edge's line
};

/// Parametric interval on a carrier segment. Endpoints are rational except
/// when produced by dmvm processing.
struct IntervalOnSegment {
  Segment carrier;
  Scalar t_lo, t_hi;
  IntervalOnSegment() = default;
  IntervalOnSegment(Segment c, Scalar lo, Scalar hi)
      : carrier(std::move(c)), t_lo(std::move(lo)), t_hi(std::move(hi)) {}
};

/// True iff x and y see each other via one specular bounce on edge e: the
/// reflection point m (determined by the equal-angle law through the virtual
/// source) lies on a visible portion of e from x, and m sees y. Grazing
/// contact counts, consistent with closed visibility.
bool reflected_visible(const SimplePolygon& P, const Point& x, const Point& y, int e);

/// Maximal visible windows of mirror edge e from x, with the virtual source.
std::vector<MirrorWindow> mirror_windows(const SimplePolygon& P, const Point& x, int e);

/// Union of everything e-reflected-visible from x, one region per maximal
/// window; regions have pairwise-disjoint interiors.
std::vector<VisibilityRegion> reflected_region(const SimplePolygon& P, const Point& x, int e);

/// Memoized per-(viewer-or-target point v, mirror e) reflection machinery:
/// the virtual source, the windows of e seen from v, and the event lines
/// whose crossings with any segment bound the e-reflected visibility of v.
class MirrorCache {
 public:
  explicit MirrorCache(const SimplePolygon& P) : P_(&P), vis_(P) {}

  struct Entry {
    Point virtual_point;                       // v reflected across line(e)
    Line mirror_line;
    std::vector<std::pair<Rat, Rat>> windows;  // visible portions of e from v
    std::vector<Line> event_lines;             // through virtual_point and every
                                               // polygon vertex / window endpoint
  };
  const Entry& entry(const Point& v, int e);

  /// {t on ed : reflected_visible(ed(t), v, e)} as sorted closed intervals.
  std::vector<std::pair<Rat, Rat>> pullback(const Point& v, int e, const Segment& ed);

  VisCache& vis() { return vis_; }
  const SimplePolygon& polygon() const { return *P_; }

 private:
  struct Key {
    Point v;
    int e;
    bool operator==(const Key& o) const { return e == o.e && v == o.v; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_combine(hash_point(k.v), static_cast<std::size_t>(k.e));
    }
  };
  const SimplePolygon* P_;
  VisCache vis_;
  std::unordered_map<Key, Entry, KeyHash> entries_;
};

/// Longest maximal interval of ed whose every point makes every vertex of
/// target e-reflected-visible (ties: smallest t_lo). Empty when none.
std::optional<IntervalOnSegment> strong_reflected_interval(const SimplePolygon& P,
                                                           const Segment& ed,
                                                           const ConvexCell& target, int e,
                                                           MirrorCache* cache = nullptr);

/// All components of the strong set (internal building block for Find).
std::vector<std::pair<Rat, Rat>> strong_reflected_components(const SimplePolygon& P,
                                                             const Segment& ed,
                                                             const ConvexCell& target, int e,
                                                             MirrorCache& cache);

/// One weak pair: while the source parameter stays in `source`, the viewer
/// sees at least one point of uw via e, and `target` is the union of the
/// visible parts over that source interval.
struct WeakIntervalPair {
  IntervalOnSegment source;  // on ed
  IntervalOnSegment target;  // on uw
};

std::vector<WeakIntervalPair> weak_reflected_intervals(const SimplePolygon& P, const Segment& ed,
                                                       const Segment& uw, int e,
                                                       MirrorCache* cache = nullptr);

// --- helpers shared with dmvm/find ----------------------------------------

/// Sorted-interval set operations on [lo,hi] pairs.
std::vector<std::pair<Rat, Rat>> interval_union(std::vector<std::pair<Rat, Rat>> a);
std::vector<std::pair<Rat, Rat>> interval_intersect(const std::vector<std::pair<Rat, Rat>>& a,
                                                    const std::vector<std::pair<Rat, Rat>>& b);
bool interval_covers(const std::vector<std::pair<Rat, Rat>>& set, const Rat& lo, const Rat& hi);

}  // namespace specguard
