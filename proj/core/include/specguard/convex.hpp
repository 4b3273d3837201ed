#pragma once

#include "specguard/geom.hpp"

#include <optional>
#include <vector>

namespace specguard {

/// Provenance of one boundary edge of a convex cell.
struct EdgeProv {
  int line_id = -1;          // index into the generating line set, -1 if unknown
  bool on_polygon = false;   // lies on the gallery boundary
};

/// Convex region with CCW boundary. Cells of the arrangement, temp-sub-region
/// and guarding-region geometry all use this shape.
struct ConvexCell {
  int id = -1;
  std::vector<Point> boundary;   // CCW, canonical start, no collinear middles
  std::vector<EdgeProv> prov;    // prov[i] describes edge boundary[i]->boundary[i+1]

  std::size_t size() const { return boundary.size(); }
  Segment edge(std::size_t i) const {
    return Segment(boundary[i], boundary[(i + 1) % boundary.size()]);
  }
};

/// Twice the signed area (positive for CCW).
Rat area2(const std::vector<Point>& poly);
inline Rat area2(const ConvexCell& c) { return area2(c.boundary); }

/// Vertex centroid; strictly interior for positive-area convex cells.
Point vertex_centroid(const std::vector<Point>& poly);
inline Point vertex_centroid(const ConvexCell& c) { return vertex_centroid(c.boundary); }

bool convex_contains(const ConvexCell& c, const Point& p);          // closed
bool convex_contains_strict(const ConvexCell& c, const Point& p);   // open

/// Remove consecutive duplicates and collinear middle vertices; rotate so the
/// lexicographically smallest vertex comes first. Keeps CCW order.
std::vector<Point> canonical_ring(std::vector<Point> ring);

/// Build a cell from a CCW ring (canonicalizes; prov reset to defaults).
ConvexCell make_cell(std::vector<Point> ring, int id = -1);

/// Exact convex intersection; nullopt iff the cells share no point.
/// Degenerate (zero-area) intersections are returned with their vertex chain.
std::optional<ConvexCell> convex_intersection(const ConvexCell& a, const ConvexCell& b);

/// Clip a half-plane (points with cross(v-u, p-u) >= 0) against a ring.
std::vector<Point> clip_halfplane(const std::vector<Point>& ring, const Point& u, const Point& v);

/// The (possibly degenerate) portion of the half-line inside the cell.
std::optional<Segment> clip_halfline_to_convex(const HalfLine& h, const ConvexCell& cell);

std::optional<Segment> clip_segment_to_convex(const Segment& s, const ConvexCell& cell);

/// Split by a line: pieces on the non-negative and non-positive side.
/// Empty optionals for sides the cell does not reach with positive area.
struct SplitResult {
  std::optional<ConvexCell> pos, neg;
};
SplitResult split_by_line(const ConvexCell& cell, const Line& l);

bool convexity_check(const std::vector<Point>& ring);  // all turns Left/Collinear

}  // namespace specguard
