#pragma once

#include "specguard/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

namespace specguard {

enum class Orientation { Left = 1, Collinear = 0, Right = -1 };

/// Exact rational point. Carries a small homogeneous cache (x=hx/hw, y=hy/hw,
/// hw>0, entries below 2^40) so hot predicates can run in 128-bit integers.
struct Point {
  Rat x, y;
  std::int64_t hx = 0, hy = 0, hw = 0;  // hw==0 => no small cache

  Point() : x(0), y(0) { refresh_cache(); }
  Point(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) { refresh_cache(); }
  Point(long long xx, long long yy) : x(xx), y(yy) { refresh_cache(); }

  bool small() const { return hw != 0; }
  void refresh_cache();

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Lexicographic (x, then y); total order used for canonical forms.
bool lex_less(const Point& a, const Point& b);

std::size_t hash_point(const Point& p);

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Line a·x + b·y + c = 0 with integer coefficients in canonical form:
/// content 1 and leading nonzero coefficient positive. Canonical form makes
/// equal lines bitwise-equal, which the arrangement dedup relies on.
struct Line {
  Int a, b, c;
  std::int64_t sa = 0, sb = 0, sc = 0;
  bool small_ = false;

  Line() : a(0), b(0), c(0) {}
  Line(Int aa, Int bb, Int cc);

  bool small() const { return small_; }
  bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Line& o) const { return !(*this == o); }
  bool operator<(const Line& o) const;
};

std::size_t hash_line(const Line& l);

struct Segment {
  Point a, b;
  Segment() = default;
  Segment(Point aa, Point bb) : a(std::move(aa)), b(std::move(bb)) {}
  Point eval(const Rat& t) const {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
  }
  bool degenerate() const { return a == b; }
  bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
};

struct HalfLine {
  Point origin;
  Rat dx, dy;
  HalfLine() : dx(0), dy(0) {}
  HalfLine(Point o, Rat ddx, Rat ddy) : origin(std::move(o)), dx(std::move(ddx)), dy(std::move(ddy)) {}
  static HalfLine through(const Point& from, const Point& toward) {
    return HalfLine(from, toward.x - from.x, toward.y - from.y);
  }
  bool valid() const { return !(dx == 0 && dy == 0); }
  Point eval(const Rat& t) const { return Point(origin.x + t * dx, origin.y + t * dy); }
};

// --- Predicates -------------------------------------------------------------

Orientation orientation(const Point& p, const Point& q, const Point& r);

/// sign(a·px + b·py + c): +1 on the positive side of the line.
int line_side(const Line& l, const Point& p);

bool collinear(const Point& p, const Point& q, const Point& r);

/// True iff q lies on the closed segment [a,b] (collinearity included).
bool on_segment(const Point& a, const Point& b, const Point& q);

/// Squared Euclidean distance, exact.
Rat dist2(const Point& a, const Point& b);

// --- Constructions ----------------------------------------------------------

/// Canonical line through two distinct points.
Line line_through(const Point& p, const Point& q);

Line line_of(const Segment& s);
Line line_of(const HalfLine& h);

struct Parallel {};
struct Identical {};
using LineIntersection = std::variant<Point, Parallel, Identical>;

LineIntersection intersect_lines(const Line& l1, const Line& l2);

/// Mirror image of p across l; an involution.
Point reflect_point(const Point& p, const Line& l);

/// Parameter t on [a,b] of the intersection with line l, if the segment's
/// supporting line is not parallel to l (the intersection may lie outside [0,1]).
std::optional<Rat> segment_line_param(const Segment& s, const Line& l);

/// Parameter t (t >= 0 kept by caller) on the half-line of its crossing with l.
std::optional<Rat> halfline_line_param(const HalfLine& h, const Line& l);

/// Exact proper/improper segment intersection classification.
/// Returns true iff closed segments share at least one point.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// True iff the open interiors cross in exactly one point that is interior to
/// both (a transversal crossing).
bool segments_cross_properly(const Segment& s1, const Segment& s2);

/// Exact comparison of directions (dx1,dy1) vs (dx2,dy2) by angle in [0,2pi),
/// for angular sorts. Returns -1, 0, +1.
int compare_directions(const Rat& dx1, const Rat& dy1, const Rat& dx2, const Rat& dy2);

}  // namespace specguard
