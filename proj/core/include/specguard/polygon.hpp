#pragma once

#include "specguard/errors.hpp"
#include "specguard/geom.hpp"

#include <set>
#include <vector>

namespace specguard {

enum class PointClass { Interior, Boundary, Exterior };

/// Simple polygon (CCW, integer vertex coordinates) with designated mirror
/// edges. Edge i runs from vertex i to vertex i+1 (mod n). All edges reflect
/// by default.
class SimplePolygon {
 public:
  /// Validates and builds. Throws InvalidPolygon on: fewer than 3 vertices,
  /// non-integer coordinates, duplicate/consecutive-collinear vertices,
  /// self-intersection, or clockwise orientation.
  /// Three mutually collinear (non-consecutive) vertices are legal; the
  /// general-position flag reports them.
  static SimplePolygon create(std::vector<Point> vertices,
                              std::vector<int> mirror_edges = {});

  std::size_t size() const { return verts_.size(); }
  const std::vector<Point>& vertices() const { return verts_; }
  const Point& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
  Segment edge(std::size_t i) const {
    return Segment(verts_[i % verts_.size()], verts_[(i + 1) % verts_.size()]);
  }

  const std::set<int>& mirror_edges() const { return mirrors_; }
  bool is_mirror(int edge) const { return mirrors_.count(edge) > 0; }

  /// True when some three vertices are collinear (general position violated).
  bool has_collinear_triple() const { return collinear_triple_; }

  Rat area2() const;

 private:
  SimplePolygon() = default;
  std::vector<Point> verts_;
  std::set<int> mirrors_;
  bool collinear_triple_ = false;
};

PointClass classify_point(const SimplePolygon& P, const Point& p);

/// Indices of vertices whose interior angle exceeds pi.
std::vector<int> reflex_vertices(const SimplePolygon& P);

}  // namespace specguard
