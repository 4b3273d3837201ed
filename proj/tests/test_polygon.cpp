#include "doctest.h"
#include "corpus.hpp"
#include "support.hpp"

#include "specguard/polygon.hpp"

using namespace specguard;

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(SimplePolygon::create({Point(0, 0), Point(1, 0)}), InvalidPolygon);
  // clockwise
  CHECK_THROWS_AS(SimplePolygon::create({Point(0, 0), Point(0, 1), Point(1, 0)}), InvalidPolygon);
  // non-integer coordinates
  CHECK_THROWS_AS(SimplePolygon::create({Point(Rat(1, 2), Rat(0)), Point(1, 0), Point(0, 1)}),
                  InvalidPolygon);
  // self-intersecting bowtie
  CHECK_THROWS_AS(
      SimplePolygon::create({Point(0, 0), Point(2, 2), Point(2, 0), Point(0, 2)}),
      InvalidPolygon);
  // straight-angle vertex
  CHECK_THROWS_AS(
      SimplePolygon::create({Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 2), Point(0, 2)}),
      InvalidPolygon);

  SimplePolygon lhex = corpus::l_hexagon();
  CHECK(lhex.size() == 6);
  CHECK(lhex.has_collinear_triple());  // (2,0), (1,1), (0,2)
  CHECK(lhex.mirror_edges().size() == 6);  // all edges reflect by default

  SimplePolygon tri = SimplePolygon::create(
      {Point(0, 0), Point(4, 0), Point(0, 4)}, {1});
  CHECK(tri.is_mirror(1));
  CHECK(!tri.is_mirror(0));
}

TEST_CASE("classify_point examples") {
  SimplePolygon sq = corpus::unit_square();
  CHECK(classify_point(sq, Point(Rat(1, 2), Rat(1, 2))) == PointClass::Interior);
  CHECK(classify_point(sq, Point(Rat(0), Rat(1, 2))) == PointClass::Boundary);
  CHECK(classify_point(sq, Point(2, 0)) == PointClass::Exterior);
  CHECK(classify_point(sq, Point(0, 0)) == PointClass::Boundary);
  CHECK(classify_point(sq, Point(1, 1)) == PointClass::Boundary);
}

TEST_CASE("classify_point agrees with a winding-free oracle on the corpus") {
  testsup::Rng rng(4711);
  auto polys = {corpus::l_hexagon(), corpus::spiral8(), corpus::hex6()};
  for (const SimplePolygon& P : polys) {
    for (int it = 0; it < 300; ++it) {
      Point p = testsup::point(rng, 8, 4);
      PointClass c = classify_point(P, p);
      // oracle: exact distance-0 boundary check plus ray in a second direction
      bool on_bd = false;
      for (std::size_t i = 0; i < P.size(); ++i) {
        Segment e = P.edge(i);
        if (on_segment(e.a, e.b, p)) { on_bd = true; break; }
      }
      if (on_bd) {
        CHECK(c == PointClass::Boundary);
        continue;
      }
      // horizontal ray to the left, half-open rule
      bool inside = false;
      for (std::size_t i = 0; i < P.size(); ++i) {
        const Point& a = P.vertex(i);
        const Point& b = P.vertex(i + 1);
        bool ab = a.x <= p.x, bb = b.x <= p.x;
        if (ab == bb) continue;
        Rat t = (p.x - a.x) / (b.x - a.x);
        Rat y = a.y + t * (b.y - a.y);
        if (y < p.y) inside = !inside;
      }
      CHECK(c == (inside ? PointClass::Interior : PointClass::Exterior));
    }
  }
}

TEST_CASE("reflex_vertices examples") {
  SimplePolygon pent = SimplePolygon::create(
      {Point(2, 0), Point(4, 1), Point(3, 3), Point(1, 3), Point(0, 1)});
  CHECK(reflex_vertices(pent).empty());

  SimplePolygon lhex = corpus::l_hexagon();
  auto r = reflex_vertices(lhex);
  REQUIRE(r.size() == 1);
  CHECK(lhex.vertex(r[0]) == Point(1, 1));

  // 3-tooth comb: interior notch corners are exactly the reflex vertices
  corpus::CombSpec spec = corpus::comb(3);
  SimplePolygon combp = corpus::comb_polygon(spec);
  auto rc = reflex_vertices(combp);
  // independent oracle: orientation of each vertex triple
  std::vector<int> expect;
  for (std::size_t i = 0; i < combp.size(); ++i) {
    if (orientation(combp.vertex(i + combp.size() - 1), combp.vertex(i), combp.vertex(i + 1)) ==
        Orientation::Right)
      expect.push_back(static_cast<int>(i));
  }
  CHECK(rc == expect);
  CHECK(rc.size() == 5);  // two mouth corners per interior notch
  for (int idx : rc) CHECK(combp.vertex(idx).y == 2);  // all on the mouth line
}

TEST_CASE("comb family construction is valid for k=3,4,5") {
  for (int k = 3; k <= 5; ++k) {
    corpus::CombSpec spec = corpus::comb(k);
    SimplePolygon P = corpus::comb_polygon(spec);
    CHECK(P.size() == 3 * static_cast<std::size_t>(k) + 1);
    CHECK(P.is_mirror(0));
    CHECK(P.mirror_edges().size() == 1);
    CHECK(classify_point(P, spec.guard) == PointClass::Interior);
    for (const Point& g : spec.direct_guards)
      CHECK(classify_point(P, g) == PointClass::Interior);
    CHECK(reflex_vertices(P).size() == 2 * static_cast<std::size_t>(k) - 1);
  }
}
