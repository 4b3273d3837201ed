#include "specguard/convex.hpp"

#include <algorithm>

namespace specguard {

Rat area2(const std::vector<Point>& poly) {
  Rat s(0);
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

Point vertex_centroid(const std::vector<Point>& poly) {
  Rat sx(0), sy(0);
  for (const Point& p : poly) { sx += p.x; sy += p.y; }
  Rat n(static_cast<long long>(poly.size()));
  return Point(sx / n, sy / n);
}

bool convex_contains(const ConvexCell& c, const Point& p) {
  std::size_t n = c.boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(c.boundary[i], c.boundary[(i + 1) % n], p) == Orientation::Right)
      return false;
  }
  return true;
}

bool convex_contains_strict(const ConvexCell& c, const Point& p) {
  std::size_t n = c.boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(c.boundary[i], c.boundary[(i + 1) % n], p) != Orientation::Left)
      return false;
  }
  return true;
}

std::vector<Point> canonical_ring(std::vector<Point> ring) {
  // drop consecutive duplicates
  std::vector<Point> tmp;
  for (const Point& p : ring) {
    if (tmp.empty() || !(tmp.back() == p)) tmp.push_back(p);
  }
  while (tmp.size() > 1 && tmp.front() == tmp.back()) tmp.pop_back();
  // drop collinear middles
  std::vector<Point> out;
  std::size_t n = tmp.size();
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = tmp[(i + n - 1) % n];
      const Point& b = tmp[i];
      const Point& c = tmp[(i + 1) % n];
      if (orientation(a, b, c) != Orientation::Collinear) out.push_back(b);
    }
    if (out.size() < 3) out = tmp;  // degenerate chain: keep as-is
  } else {
    out = tmp;
  }
  if (out.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (lex_less(out[i], out[best])) best = i;
  std::rotate(out.begin(), out.begin() + best, out.end());
  return out;
}

ConvexCell make_cell(std::vector<Point> ring, int id) {
  ConvexCell c;
  c.id = id;
  c.boundary = canonical_ring(std::move(ring));
  c.prov.assign(c.boundary.size(), EdgeProv{});
  return c;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& ring, const Point& u, const Point& v) {
  std::vector<Point> out;
  std::size_t n = ring.size();
  if (n == 0) return out;
  auto side = [&](const Point& p) { return static_cast<int>(orientation(u, v, p)); };
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = ring[i];
    const Point& nxt = ring[(i + 1) % n];
    int sc = side(cur), sn = side(nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      // exact crossing with the (u,v) line
      Line l = line_through(u, v);
      Segment seg(cur, nxt);
      auto t = segment_line_param(seg, l);
      out.push_back(seg.eval(*t));
    }
  }
  return out;
}

std::optional<ConvexCell> convex_intersection(const ConvexCell& a, const ConvexCell& b) {
  std::vector<Point> ring = a.boundary;
  std::size_t nb = b.boundary.size();
  if (nb < 3) {
    // degenerate clip region: intersect a with the segment/point b
    if (nb == 0) return std::nullopt;
    if (nb == 1) {
      if (convex_contains(a, b.boundary[0])) return make_cell({b.boundary[0]});
      return std::nullopt;
    }
    auto seg = clip_segment_to_convex(Segment(b.boundary[0], b.boundary[1]), a);
    if (!seg) return std::nullopt;
    if (seg->a == seg->b) return make_cell({seg->a});
    return make_cell({seg->a, seg->b});
  }
  for (std::size_t i = 0; i < nb && !ring.empty(); ++i) {
    ring = clip_halfplane(ring, b.boundary[i], b.boundary[(i + 1) % nb]);
  }
  if (ring.empty()) return std::nullopt;
  ConvexCell out = make_cell(std::move(ring));
  if (out.boundary.empty()) return std::nullopt;
  return out;
}

std::optional<Segment> clip_segment_to_convex(const Segment& s, const ConvexCell& cell) {
  Rat tlo(0), thi(1);
  std::size_t n = cell.boundary.size();
  Rat dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = cell.boundary[i];
    const Point& v = cell.boundary[(i + 1) % n];
    // inside: cross(v-u, p-u) >= 0
    Rat ex = v.x - u.x, ey = v.y - u.y;
    Rat f0 = ex * (s.a.y - u.y) - ey * (s.a.x - u.x);
    Rat slope = ex * dy - ey * dx;
    if (slope == 0) {
      if (f0 < 0) return std::nullopt;
    } else if (slope > 0) {
      Rat bound = -f0 / slope;
      if (bound > tlo) tlo = bound;
    } else {
      Rat bound = -f0 / slope;
      if (bound < thi) thi = bound;
    }
    if (tlo > thi) return std::nullopt;
  }
  return Segment(s.eval(tlo), s.eval(thi));
}

std::optional<Segment> clip_halfline_to_convex(const HalfLine& h, const ConvexCell& cell) {
  // parametric clipping on t >= 0
  Rat tlo(0);
  std::optional<Rat> thi;
  std::size_t n = cell.boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = cell.boundary[i];
    const Point& v = cell.boundary[(i + 1) % n];
    Rat ex = v.x - u.x, ey = v.y - u.y;
    Rat f0 = ex * (h.origin.y - u.y) - ey * (h.origin.x - u.x);
    Rat slope = ex * h.dy - ey * h.dx;
    if (slope == 0) {
      if (f0 < 0) return std::nullopt;
    } else if (slope > 0) {
      Rat bound = -f0 / slope;
      if (bound > tlo) tlo = bound;
    } else {
      Rat bound = -f0 / slope;
      if (!thi || bound < *thi) thi = bound;
    }
    if (thi && tlo > *thi) return std::nullopt;
  }
  if (!thi) return std::nullopt;  // unbounded: cannot happen for a bounded cell
  return Segment(h.eval(tlo), h.eval(*thi));
}

SplitResult split_by_line(const ConvexCell& cell, const Line& l) {
  std::vector<Point> pos, neg;
  std::size_t n = cell.boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = cell.boundary[i];
    const Point& nxt = cell.boundary[(i + 1) % n];
    int sc = line_side(l, cur);
    int sn = line_side(l, nxt);
    if (sc >= 0) pos.push_back(cur);
    if (sc <= 0) neg.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      Segment seg(cur, nxt);
      auto t = segment_line_param(seg, l);
      Point x = seg.eval(*t);
      pos.push_back(x);
      neg.push_back(x);
    }
  }
  SplitResult out;
  auto finish = [&](std::vector<Point>& ring) -> std::optional<ConvexCell> {
    ConvexCell c = make_cell(std::move(ring));
    if (c.boundary.size() < 3 || area2(c) == 0) return std::nullopt;
    return c;
  };
  out.pos = finish(pos);
  out.neg = finish(neg);
  return out;
}

bool convexity_check(const std::vector<Point>& ring) {
  std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) == Orientation::Right)
      return false;
  }
  return true;
}

}  // namespace specguard
