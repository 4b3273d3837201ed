#include "doctest.h"
#include "support.hpp"

#include "specguard/convex.hpp"
#include "specguard/geom.hpp"

using namespace specguard;
using testsup::Rng;

TEST_CASE("orientation basic cases") {
  CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation::Left);
  CHECK(orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == Orientation::Collinear);
  // sign of the hand-expanded determinant (1-0)*(0-0)-(1-0)*(1-0) = -1
  CHECK(orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == Orientation::Right);
}

TEST_CASE("orientation antisymmetry and cyclic invariance") {
  Rng rng(42);
  for (int it = 0; it < 300; ++it) {
    Point p = testsup::point(rng), q = testsup::point(rng), r = testsup::point(rng);
    Orientation o = orientation(p, q, r);
    CHECK(orientation(q, r, p) == o);
    CHECK(orientation(r, p, q) == o);
    auto flip = [](Orientation v) {
      return static_cast<Orientation>(-static_cast<int>(v));
    };
    CHECK(orientation(q, p, r) == flip(o));
    CHECK(orientation(p, r, q) == flip(o));
  }
}

TEST_CASE("orientation fast path agrees with big-coordinate fallback") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    Point p = testsup::point(rng), q = testsup::point(rng), r = testsup::point(rng);
    // blow the coordinates past the small cache limit by a common scale;
    // orientation is invariant under similarity
    Rat scale = Rat(Int("123456789123456789123"), 17);
    auto big = [&](const Point& a) { return Point(a.x * scale, a.y * scale); };
    CHECK(orientation(p, q, r) == orientation(big(p), big(q), big(r)));
  }
}

TEST_CASE("reflect_point examples") {
  Line y0(Int(0), Int(1), Int(0));  // y = 0
  CHECK(reflect_point(Point(1, 2), y0) == Point(Rat(1), Rat(-2)));

  Line diag(Int(1), Int(1), Int(-2));  // x + y - 2 = 0
  Point p(0, 0);
  Point img = reflect_point(p, diag);
  CHECK(img == Point(Rat(2), Rat(2)));
  // independent oracle: equal distances to points on the mirror line and
  // the displacement is perpendicular to the line direction
  Point on1(2, 0), on2(0, 2);
  CHECK(dist2(p, on1) == dist2(img, on1));
  CHECK(dist2(p, on2) == dist2(img, on2));
  Rat dot = (img.x - p.x) * (on2.x - on1.x) + (img.y - p.y) * (on2.y - on1.y);
  CHECK(dot == 0);

  Point fixed(1, 1);
  CHECK(reflect_point(fixed, diag) == fixed);
}

TEST_CASE("reflect_point is an involution and preserves distances to the line") {
  Rng rng(99);
  for (int it = 0; it < 200; ++it) {
    Point a = testsup::point(rng), b = testsup::point(rng);
    if (a == b) continue;
    Line l = line_through(a, b);
    Point p = testsup::point(rng);
    Point img = reflect_point(p, l);
    CHECK(reflect_point(img, l) == p);
    CHECK(dist2(p, a) == dist2(img, a));
    CHECK(dist2(p, b) == dist2(img, b));
  }
}

TEST_CASE("intersect_lines examples") {
  Line x0(Int(1), Int(0), Int(0));
  Line y0(Int(0), Int(1), Int(0));
  Line x1(Int(1), Int(0), Int(-1));
  Line sum1(Int(1), Int(1), Int(-1));
  Line sum2(Int(2), Int(2), Int(-2));  // same line, canonicalizes to sum1

  auto r1 = intersect_lines(x0, y0);
  REQUIRE(std::holds_alternative<Point>(r1));
  CHECK(std::get<Point>(r1) == Point(0, 0));

  CHECK(std::holds_alternative<Parallel>(intersect_lines(x0, x1)));
  CHECK(std::holds_alternative<Identical>(intersect_lines(sum1, sum2)));
}

TEST_CASE("intersect_lines: the point satisfies both equations") {
  Rng rng(3);
  for (int it = 0; it < 300; ++it) {
    Point a = testsup::point(rng), b = testsup::point(rng), c = testsup::point(rng), d = testsup::point(rng);
    if (a == b || c == d) continue;
    Line l1 = line_through(a, b), l2 = line_through(c, d);
    auto r = intersect_lines(l1, l2);
    if (!std::holds_alternative<Point>(r)) continue;
    const Point& p = std::get<Point>(r);
    CHECK(Rat(l1.a) * p.x + Rat(l1.b) * p.y + Rat(l1.c) == 0);
    CHECK(Rat(l2.a) * p.x + Rat(l2.b) * p.y + Rat(l2.c) == 0);
  }
}

namespace {

// Independent parametric-clipping oracle: candidate parameters from every
// edge line, then midpoint membership tests.
std::optional<Segment> clip_oracle(const HalfLine& h, const ConvexCell& cell) {
  std::vector<Rat> ts{Rat(0)};
  for (std::size_t i = 0; i < cell.size(); ++i) {
    Line l = line_of(cell.edge(i));
    auto t = halfline_line_param(h, l);
    if (t && *t >= 0) ts.push_back(*t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::optional<Rat> lo, hi;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    if (convex_contains(cell, h.eval(mid))) {
      if (!lo) lo = ts[i];
      hi = ts[i + 1];
    }
  }
  if (!lo) {
    // maybe a single grazing point
    for (const Rat& t : ts)
      if (convex_contains(cell, h.eval(t))) return Segment(h.eval(t), h.eval(t));
    return std::nullopt;
  }
  return Segment(h.eval(*lo), h.eval(*hi));
}

}  // namespace

TEST_CASE("clip_halfline_to_convex examples") {
  ConvexCell sq = make_cell({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});

  HalfLine right(Point(Rat(1, 2), Rat(1, 2)), Rat(1), Rat(0));
  auto got = clip_halfline_to_convex(right, sq);
  auto want = clip_oracle(right, sq);
  REQUIRE(got.has_value());
  REQUIRE(want.has_value());
  CHECK(got->a == want->a);
  CHECK(got->b == want->b);
  CHECK(got->a == Point(Rat(1, 2), Rat(1, 2)));
  CHECK(got->b == Point(Rat(1), Rat(1, 2)));

  HalfLine miss(Point(5, 5), Rat(1), Rat(0));
  CHECK(!clip_halfline_to_convex(miss, sq).has_value());

  // along the bottom edge
  HalfLine along(Point(Rat(-1), Rat(0)), Rat(1), Rat(0));
  auto got2 = clip_halfline_to_convex(along, sq);
  auto want2 = clip_oracle(along, sq);
  REQUIRE(got2.has_value());
  REQUIRE(want2.has_value());
  CHECK(got2->a == want2->a);
  CHECK(got2->b == want2->b);
  CHECK(got2->a == Point(0, 0));
  CHECK(got2->b == Point(1, 0));
}

TEST_CASE("clip_halfline oracle agreement on random cells") {
  Rng rng(1234);
  for (int it = 0; it < 200; ++it) {
    ConvexCell cell = testsup::convex_cell(rng);
    Point o = testsup::point(rng);
    Rat dx = testsup::rat(rng), dy = testsup::rat(rng);
    if (dx == 0 && dy == 0) continue;
    HalfLine h(o, dx, dy);
    auto got = clip_halfline_to_convex(h, cell);
    auto want = clip_oracle(h, cell);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->a == want->a);
      CHECK(got->b == want->b);
    }
  }
}

TEST_CASE("convex_intersection examples") {
  ConvexCell sq = make_cell({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
  auto self = convex_intersection(sq, sq);
  REQUIRE(self.has_value());
  CHECK(area2(*self) == area2(sq));

  ConvexCell far_sq = make_cell({Point(2, 0), Point(3, 0), Point(3, 1), Point(2, 1)});
  CHECK(!convex_intersection(sq, far_sq).has_value());

  ConvexCell shifted = make_cell({Point(Rat(1, 2), Rat(1, 2)), Point(Rat(3, 2), Rat(1, 2)),
                                  Point(Rat(3, 2), Rat(3, 2)), Point(Rat(1, 2), Rat(3, 2))});
  auto inter = convex_intersection(sq, shifted);
  REQUIRE(inter.has_value());
  CHECK(area2(*inter) == Rat(1, 2));  // twice the area 1/4
  REQUIRE(inter->boundary.size() == 4);
  CHECK(inter->boundary[0] == Point(Rat(1, 2), Rat(1, 2)));
}

TEST_CASE("convex_intersection area bound invariant") {
  Rng rng(555);
  for (int it = 0; it < 200; ++it) {
    ConvexCell a = testsup::convex_cell(rng);
    ConvexCell b = testsup::convex_cell(rng);
    auto inter = convex_intersection(a, b);
    if (!inter) continue;
    Rat ia = area2(*inter);
    CHECK(ia <= area2(a));
    CHECK(ia <= area2(b));
    CHECK(ia >= 0);
    // intersection points belong to both cells
    for (const Point& p : inter->boundary) {
      CHECK(convex_contains(a, p));
      CHECK(convex_contains(b, p));
    }
  }
}

TEST_CASE("split_by_line partitions a cell exactly") {
  Rng rng(31);
  for (int it = 0; it < 150; ++it) {
    ConvexCell cell = testsup::convex_cell(rng);
    Point a = testsup::point(rng), b = testsup::point(rng);
    if (a == b) continue;
    Line l = line_through(a, b);
    SplitResult s = split_by_line(cell, l);
    Rat total(0);
    if (s.pos) total += area2(*s.pos);
    if (s.neg) total += area2(*s.neg);
    CHECK(total == area2(cell));
  }
}
