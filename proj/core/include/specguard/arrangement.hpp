#pragma once

#include "specguard/convex.hpp"
#include "specguard/errors.hpp"
#include "specguard/polygon.hpp"

#include <cstddef>
#include <vector>

namespace specguard {

inline constexpr std::size_t kDefaultLineCap = 512;

/// The second-order convex region decomposition: cells partition the polygon
/// exactly; every cell edge lies on a generating line (polygon edges included).
struct ScrSet {
  std::vector<ConvexCell> cells;       // canonical order; cell id == index
  std::vector<Line> generating_lines;  // canonical (sorted) order

  Rat total_area2() const {
    Rat s(0);
    for (const ConvexCell& c : cells) s += area2(c);
    return s;
  }
};

/// Deduplicated canonical lines: (step 1) all lines through vertex pairs;
/// (step 2) all lines through a step-1 pairwise intersection point (inside or
/// outside the polygon) and a reflex vertex. Throws LineBudgetExceeded when
/// more than `cap` lines would be produced.
std::vector<Line> generate_lines(const SimplePolygon& P, std::size_t cap = kDefaultLineCap);

/// The arrangement of generate_lines(P) clipped to P; cells are the minimal
/// faces, convex, with exact rational coordinates.
ScrSet build_scr(const SimplePolygon& P, std::size_t cap = kDefaultLineCap);

}  // namespace specguard
