#pragma once

#include "specguard/mirror.hpp"

#include <vector>

namespace specguard {

/// Point with possibly-algebraic coordinates (dmvm positions only).
struct AlgPoint {
  Scalar x, y;
};

/// Position on a source segment where the directly visible part of the target
/// and its e-mirror-visible part merge at a single shared endpoint (the
/// projection q on the target).
struct DmvmPoint {
  AlgPoint position;    // on the source segment ed
  int mirror = -1;      // mirror edge index
  int reflex = -1;      // dominant reflex vertex index
  AlgPoint projection;  // q on the target segment
  Scalar t;             // parameter of position on ed
  Scalar s;             // parameter of projection on uw
};

/// Moving portion endpoint on uw as the viewer slides along a segment:
/// s(t) = (a t + b) / (c t + d), the parameter on uw of the crossing of
/// line(center(t), pivot) with uw. center(t) is an affine point path.
struct ProjEndpoint {
  Rat a, b, c, d;
  bool valid = false;

  std::optional<Rat> eval(const Rat& t) const {
    Rat den = c * t + d;
    if (den == 0) return std::nullopt;
    return (a * t + b) / den;
  }
};

/// Endpoint generator for center path p0 + t*dir casting through pivot onto uw.
ProjEndpoint projective_endpoint(const Point& p0, const Rat& dirx, const Rat& diry,
                                 const Point& pivot, const Segment& uw);

/// Parameters t where two moving endpoints coincide (the merge quadratic).
std::vector<Scalar> merge_params(const ProjEndpoint& f, const ProjEndpoint& g);

/// Evaluate (a t + b)/(c t + d) at an exact scalar; nullopt when the
/// denominator vanishes there.
std::optional<Scalar> eval_projective(const ProjEndpoint& pe, const Scalar& t);

/// All dmvm points of (ed, uw, e): one candidate per (mirror-edge endpoint,
/// reflex vertex) pair, both quadratic roots kept when they pass the exact
/// range tests (position on ed, projection on uw, blockers between).
std::vector<DmvmPoint> dmvm_points(const SimplePolygon& P, const Segment& ed, const Segment& uw,
                                   int e, MirrorCache* cache = nullptr);

}  // namespace specguard
