#include "specguard/visibility.hpp"

#include <algorithm>

namespace specguard {

namespace {

// Collect parameters in [0,1] where segment s meets the polygon boundary
// (edge-line crossings restricted to the edges, plus collinear overlap ends).
void boundary_contact_params(const SimplePolygon& P, const Segment& s, std::vector<Rat>& ts) {
  std::size_t n = P.size();
  Rat sdx = s.b.x - s.a.x, sdy = s.b.y - s.a.y;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = P.vertex(i);
    const Point& v = P.vertex(i + 1);
    Rat edx = v.x - u.x, edy = v.y - u.y;
    Rat denom = sdx * edy - sdy * edx;
    if (denom == 0) {
      // parallel; collinear overlap contributes the projections of u and v
      if (orientation(s.a, s.b, u) == Orientation::Collinear) {
        Rat len2 = sdx * sdx + sdy * sdy;
        Rat tu = ((u.x - s.a.x) * sdx + (u.y - s.a.y) * sdy) / len2;
        Rat tv = ((v.x - s.a.x) * sdx + (v.y - s.a.y) * sdy) / len2;
        if (tu >= 0 && tu <= 1) ts.push_back(tu);
        if (tv >= 0 && tv <= 1) ts.push_back(tv);
      }
      continue;
    }
    // s.a + t*(s.b-s.a) = u + w*(v-u)
    Rat rx = u.x - s.a.x, ry = u.y - s.a.y;
    Rat t = (rx * edy - ry * edx) / denom;
    Rat w = (rx * sdy - ry * sdx) / denom;
    if (t >= 0 && t <= 1 && w >= 0 && w <= 1) ts.push_back(t);
  }
}

bool classify_not_exterior(const SimplePolygon& P, const Point& p) {
  return classify_point(P, p) != PointClass::Exterior;
}

}  // namespace

bool segment_visible_unchecked(const SimplePolygon& P, const Point& a, const Point& b) {
  if (a == b) return true;
  std::size_t n = P.size();
  Segment ab(a, b);
  bool touch = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = P.vertex(i);
    const Point& v = P.vertex(i + 1);
    int o1 = static_cast<int>(orientation(a, b, u));
    int o2 = static_cast<int>(orientation(a, b, v));
    int o3 = static_cast<int>(orientation(u, v, a));
    int o4 = static_cast<int>(orientation(u, v, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return false;  // proper crossing
    if (!touch) {
      if ((o1 == 0 && on_segment(a, b, u)) || (o2 == 0 && on_segment(a, b, v)) ||
          (o3 == 0 && on_segment(u, v, a)) || (o4 == 0 && on_segment(u, v, b)))
        touch = true;
    }
  }
  if (!touch) return true;  // endpoints inside, no boundary contact at all
  // Subdivide at every boundary contact and classify the gaps.
  std::vector<Rat> ts{Rat(0), Rat(1)};
  boundary_contact_params(P, ab, ts);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    if (!classify_not_exterior(P, ab.eval(mid))) return false;
  }
  return true;
}

bool segment_visible(const SimplePolygon& P, const Point& a, const Point& b) {
  if (classify_point(P, a) == PointClass::Exterior || classify_point(P, b) == PointClass::Exterior)
    throw QueryOutsidePolygon();
  return segment_visible_unchecked(P, a, b);
}

std::vector<std::pair<Rat, Rat>> visible_portions_of_segment(const SimplePolygon& P,
                                                             const Point& q,
                                                             const Segment& s) {
  std::vector<Rat> ts{Rat(0), Rat(1)};
  // shadow candidates: intersections of s with every line through q and a vertex
  for (const Point& v : P.vertices()) {
    if (v == q) continue;
    Line l = line_through(q, v);
    auto t = segment_line_param(s, l);
    if (t && *t >= 0 && *t <= 1) ts.push_back(*t);
  }
  boundary_contact_params(P, s, ts);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::size_t m = ts.size();
  std::vector<bool> gap_vis(m > 0 ? m - 1 : 0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    gap_vis[i] = segment_visible_unchecked(P, q, s.eval(mid));
  }
  std::vector<std::pair<Rat, Rat>> out;
  // maximal runs of visible gaps; the visible set is closed, so the run's
  // boundary parameters belong to it
  for (std::size_t i = 0; i + 1 < m;) {
    if (gap_vis[i]) {
      std::size_t j = i;
      while (j < gap_vis.size() && gap_vis[j]) ++j;
      out.emplace_back(ts[i], ts[j]);
      i = j;
    } else {
      ++i;
    }
  }
  // isolated visible parameters between invisible gaps (grazing contacts)
  for (std::size_t k = 0; k < m; ++k) {
    bool lv = k > 0 && gap_vis[k - 1];
    bool rv = k < gap_vis.size() && gap_vis[k];
    if (!lv && !rv && segment_visible_unchecked(P, q, s.eval(ts[k])))
      out.emplace_back(ts[k], ts[k]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& iv : out) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      if (iv.second > merged.back().second) merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

std::vector<Segment> visible_portions_of_edge(const SimplePolygon& P, const Point& q, int e) {
  if (classify_point(P, q) == PointClass::Exterior) throw QueryOutsidePolygon();
  Segment s = P.edge(e);
  auto ivs = visible_portions_of_segment(P, q, s);
  std::vector<Segment> out;
  out.reserve(ivs.size());
  for (const auto& [t0, t1] : ivs) out.emplace_back(s.eval(t0), s.eval(t1));
  return out;
}

VisibilityRegion point_visibility(const SimplePolygon& P, const Point& q) {
  if (classify_point(P, q) == PointClass::Exterior) throw QueryOutsidePolygon();
  VisibilityRegion region;
  std::size_t n = P.size();
  for (std::size_t e = 0; e < n; ++e) {
    Segment s = P.edge(e);
    auto ivs = visible_portions_of_segment(P, q, s);
    for (const auto& [t0, t1] : ivs) {
      if (t0 == t1) continue;  // degenerate grazing spike: measure zero
      Point a = s.eval(t0), b = s.eval(t1);
      if (region.boundary.empty() || !(region.boundary.back() == a)) region.boundary.push_back(a);
      region.boundary.push_back(b);
    }
  }
  if (region.boundary.size() > 1 && region.boundary.front() == region.boundary.back())
    region.boundary.pop_back();
  return region;
}

const std::vector<std::pair<Rat, Rat>>& VisCache::portions(const Point& q, const Segment& s) {
  Key k{q, s};
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  auto res = visible_portions_of_segment(*P_, q, s);
  return cache_.emplace(std::move(k), std::move(res)).first->second;
}

}  // namespace specguard
