#include "specguard/polygon.hpp"

#include "specguard/convex.hpp"

namespace specguard {

SimplePolygon SimplePolygon::create(std::vector<Point> vertices, std::vector<int> mirror_edges) {
  SimplePolygon P;
  std::size_t n = vertices.size();
  if (n < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
  for (const Point& p : vertices) {
    if (denominator(p.x) != 1 || denominator(p.y) != 1)
      throw InvalidPolygon("vertex coordinates must be integers");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) throw InvalidPolygon("duplicate vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[(i + n - 1) % n];
    const Point& b = vertices[i];
    const Point& c = vertices[(i + 1) % n];
    if (orientation(a, b, c) == Orientation::Collinear)
      throw InvalidPolygon("consecutive collinear vertices (degenerate vertex)");
  }
  // simplicity: non-adjacent edges must not meet at all
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei(vertices[i], vertices[(i + 1) % n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      Segment ej(vertices[j], vertices[(j + 1) % n]);
      if (segments_intersect(ei, ej)) throw InvalidPolygon("self-intersecting boundary");
    }
  }
  if (specguard::area2(vertices) <= 0) throw InvalidPolygon("vertices must be in CCW order");

  // general position check (warning only)
  for (std::size_t i = 0; i < n && !P.collinear_triple_; ++i)
    for (std::size_t j = i + 1; j < n && !P.collinear_triple_; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(vertices[i], vertices[j], vertices[k])) { P.collinear_triple_ = true; break; }

  P.verts_ = std::move(vertices);
  if (mirror_edges.empty()) {
    for (std::size_t i = 0; i < n; ++i) P.mirrors_.insert(static_cast<int>(i));
  } else {
    for (int e : mirror_edges) {
      if (e < 0 || static_cast<std::size_t>(e) >= n)
        throw InvalidPolygon("mirror edge index out of range");
      P.mirrors_.insert(e);
    }
  }
  return P;
}

Rat SimplePolygon::area2() const { return specguard::area2(verts_); }

PointClass classify_point(const SimplePolygon& P, const Point& p) {
  std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    Segment e = P.edge(i);
    if (on_segment(e.a, e.b, p)) return PointClass::Boundary;
  }
  // crossing parity with an upward vertical ray, half-open edge rule
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = P.vertex(i);
    const Point& b = P.vertex(i + 1);
    bool a_below = a.y <= p.y, b_below = b.y <= p.y;
    if (a_below == b_below) continue;
    // x coordinate of the edge at height p.y
    Rat t = (p.y - a.y) / (b.y - a.y);
    Rat x = a.x + t * (b.x - a.x);
    if (x > p.x) inside = !inside;
  }
  return inside ? PointClass::Interior : PointClass::Exterior;
}

std::vector<int> reflex_vertices(const SimplePolygon& P) {
  std::vector<int> out;
  std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(P.vertex(i + n - 1), P.vertex(i), P.vertex(i + 1)) == Orientation::Right)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace specguard
