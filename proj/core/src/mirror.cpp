#include "specguard/mirror.hpp"

#include <algorithm>

namespace specguard {

namespace {

// Reflection point of the (x, y, e) configuration: the crossing of the
// segment from reflect(x) to y with the mirror line. Returns the parameter of
// m along edge e, or nullopt when the reflected path cannot cross the line.
std::optional<Rat> reflection_param(const SimplePolygon& P, const Point& x, const Point& y,
                                    int e, Point* m_out) {
  Segment me = P.edge(e);
  Line L = line_of(me);
  Point xr = reflect_point(x, L);
  int sx = line_side(L, xr);
  int sy = line_side(L, y);
  Point m;
  if (sx == 0 && sy == 0) {
    // both on the mirror line: take m = y (pure grazing configuration)
    m = y;
  } else if (sx == 0) {
    m = xr;  // x lies on the mirror line
  } else if (sy == 0) {
    m = y;
  } else if (sx == sy) {
    return std::nullopt;  // same side: no specular path
  } else {
    Segment ry(xr, y);
    auto t = segment_line_param(ry, L);
    if (!t) return std::nullopt;
    m = ry.eval(*t);
  }
  // parameter of m along the edge
  Rat edx = me.b.x - me.a.x, edy = me.b.y - me.a.y;
  Rat len2 = edx * edx + edy * edy;
  Rat w = ((m.x - me.a.x) * edx + (m.y - me.a.y) * edy) / len2;
  if (m_out) *m_out = m;
  return w;
}

}  // namespace

bool reflected_visible(const SimplePolygon& P, const Point& x, const Point& y, int e) {
  if (!P.is_mirror(e)) throw NotAMirror(e);
  if (classify_point(P, x) == PointClass::Exterior || classify_point(P, y) == PointClass::Exterior)
    throw QueryOutsidePolygon();
  Point m;
  auto w = reflection_param(P, x, y, e, &m);
  if (!w || *w < 0 || *w > 1) return false;
  return segment_visible_unchecked(P, x, m) && segment_visible_unchecked(P, m, y);
}

std::vector<MirrorWindow> mirror_windows(const SimplePolygon& P, const Point& x, int e) {
  if (!P.is_mirror(e)) throw NotAMirror(e);
  if (classify_point(P, x) == PointClass::Exterior) throw QueryOutsidePolygon();
  Segment me = P.edge(e);
  Line L = line_of(me);
  Point vs = reflect_point(x, L);
  std::vector<MirrorWindow> out;
  for (const auto& [t0, t1] : visible_portions_of_segment(P, x, me)) {
    MirrorWindow w;
    w.edge = e;
    w.window = Segment(me.eval(t0), me.eval(t1));
    w.virtual_source = vs;
    out.push_back(std::move(w));
  }
  return out;
}

const MirrorCache::Entry& MirrorCache::entry(const Point& v, int e) {
  Key k{v, e};
  auto it = entries_.find(k);
  if (it != entries_.end()) return it->second;
  Entry ent;
  Segment me = P_->edge(e);
  ent.mirror_line = line_of(me);
  ent.virtual_point = reflect_point(v, ent.mirror_line);
  ent.windows = vis_.portions(v, me);
  auto add_line = [&](const Point& a, const Point& b) {
    if (a == b) return;
    ent.event_lines.push_back(line_through(a, b));
  };
  for (const Point& u : P_->vertices()) add_line(ent.virtual_point, u);
  for (const auto& [t0, t1] : ent.windows) {
    add_line(ent.virtual_point, me.eval(t0));
    add_line(ent.virtual_point, me.eval(t1));
  }
  // crossing of the mirror line itself (degenerate reflections)
  ent.event_lines.push_back(ent.mirror_line);
  return entries_.emplace(std::move(k), std::move(ent)).first->second;
}

std::vector<std::pair<Rat, Rat>> MirrorCache::pullback(const Point& v, int e, const Segment& ed) {
  const Entry& ent = entry(v, e);
  std::vector<Rat> ts{Rat(0), Rat(1)};
  for (const Line& l : ent.event_lines) {
    auto t = segment_line_param(ed, l);
    if (t && *t >= 0 && *t <= 1) ts.push_back(*t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto pred = [&](const Rat& t) {
    Point x = ed.eval(t);
    if (classify_point(*P_, x) == PointClass::Exterior) return false;
    Point m;
    auto w = reflection_param(*P_, v, x, e, &m);  // symmetric roles: same m
    if (!w || *w < 0 || *w > 1) return false;
    // m must lie in a window visible from v, and m must see x
    bool in_window = false;
    for (const auto& [t0, t1] : ent.windows) {
      if (*w >= t0 && *w <= t1) { in_window = true; break; }
    }
    if (!in_window) return false;
    return segment_visible_unchecked(*P_, m, x);
  };

  std::size_t mcount = ts.size();
  std::vector<bool> gap(mcount > 0 ? mcount - 1 : 0);
  for (std::size_t i = 0; i + 1 < mcount; ++i) gap[i] = pred((ts[i] + ts[i + 1]) / 2);
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i + 1 < mcount;) {
    if (gap[i]) {
      std::size_t j = i;
      while (j < gap.size() && gap[j]) ++j;
      out.emplace_back(ts[i], ts[j]);
      i = j;
    } else {
      ++i;
    }
  }
  for (std::size_t k = 0; k < mcount; ++k) {
    bool lv = k > 0 && gap[k - 1];
    bool rv = k < gap.size() && gap[k];
    if (!lv && !rv && pred(ts[k])) out.emplace_back(ts[k], ts[k]);
  }
  return interval_union(std::move(out));
}

std::vector<std::pair<Rat, Rat>> interval_union(std::vector<std::pair<Rat, Rat>> a) {
  std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second < y.second;
  });
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& iv : a) {
    if (!out.empty() && iv.first <= out.back().second) {
      if (iv.second > out.back().second) out.back().second = iv.second;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> interval_intersect(const std::vector<std::pair<Rat, Rat>>& a,
                                                    const std::vector<std::pair<Rat, Rat>>& b) {
  std::vector<std::pair<Rat, Rat>> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Rat lo = std::max(a[i].first, b[j].first);
    Rat hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) ++i;
    else ++j;
  }
  return out;
}

bool interval_covers(const std::vector<std::pair<Rat, Rat>>& set, const Rat& lo, const Rat& hi) {
  Rat cur = lo;
  for (const auto& [a, b] : set) {
    if (a > cur) return false;
    if (b >= cur) cur = b;
    if (cur >= hi) return true;
  }
  return cur >= hi;
}

std::vector<std::pair<Rat, Rat>> strong_reflected_components(const SimplePolygon& P,
                                                             const Segment& ed,
                                                             const ConvexCell& target, int e,
                                                             MirrorCache& cache) {
  std::vector<std::pair<Rat, Rat>> acc{{Rat(0), Rat(1)}};
  for (const Point& v : target.boundary) {
    acc = interval_intersect(acc, cache.pullback(v, e, ed));
    if (acc.empty()) break;
  }
  return acc;
}

std::optional<IntervalOnSegment> strong_reflected_interval(const SimplePolygon& P,
                                                           const Segment& ed,
                                                           const ConvexCell& target, int e,
                                                           MirrorCache* cache) {
  std::optional<MirrorCache> local;
  if (!cache) { local.emplace(P); cache = &*local; }
  auto comp = strong_reflected_components(P, ed, target, e, *cache);
  if (comp.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < comp.size(); ++i) {
    Rat li = comp[i].second - comp[i].first;
    Rat lb = comp[best].second - comp[best].first;
    if (li > lb) best = i;
  }
  return IntervalOnSegment(ed, Scalar(comp[best].first), Scalar(comp[best].second));
}

std::vector<VisibilityRegion> reflected_region(const SimplePolygon& P, const Point& x, int e) {
  auto windows = mirror_windows(P, x, e);
  std::vector<VisibilityRegion> out;
  Segment me = P.edge(e);
  Line L = line_of(me);
  Point vs = reflect_point(x, L);
  if (line_side(L, vs) == 0) return out;  // viewer on the mirror line: degenerate

  // First boundary exit along the ray vs + t*d, measured beyond the mirror
  // crossing m. Grazing contacts are walked through.
  auto far_hit = [&](const Rat& dx, const Rat& dy) -> Point {
    HalfLine ray(vs, dx, dy);
    auto tm = halfline_line_param(ray, L);
    Point m = ray.eval(*tm);
    Rat far_scale(1 << 14);
    Segment probe(m, Point(m.x + dx * far_scale, m.y + dy * far_scale));
    std::vector<Rat> ts{Rat(0), Rat(1)};
    for (std::size_t i = 0; i < P.size(); ++i) {
      Segment pe = P.edge(i);
      Rat sdx = probe.b.x - probe.a.x, sdy = probe.b.y - probe.a.y;
      Rat edx = pe.b.x - pe.a.x, edy = pe.b.y - pe.a.y;
      Rat denom = sdx * edy - sdy * edx;
      if (denom == 0) {
        if (orientation(probe.a, probe.b, pe.a) == Orientation::Collinear) {
          Rat len2 = sdx * sdx + sdy * sdy;
          for (const Point* pp : {&pe.a, &pe.b}) {
            Rat t = ((pp->x - m.x) * sdx + (pp->y - m.y) * sdy) / len2;
            if (t >= 0 && t <= 1) ts.push_back(t);
          }
        }
        continue;
      }
      Rat rx = pe.a.x - m.x, ry = pe.a.y - m.y;
      Rat t = (rx * edy - ry * edx) / denom;
      Rat wv = (rx * sdy - ry * sdx) / denom;
      if (t >= 0 && t <= 1 && wv >= 0 && wv <= 1) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      Rat mid = (ts[i] + ts[i + 1]) / 2;
      if (classify_point(P, probe.eval(mid)) == PointClass::Exterior) return probe.eval(ts[i]);
    }
    return probe.b;
  };

  for (const MirrorWindow& w : windows) {
    if (w.window.a == w.window.b) continue;
    struct Ev { Rat dx, dy; };
    auto dir_of = [&](const Point& p) { return Ev{p.x - vs.x, p.y - vs.y}; };
    Ev da = dir_of(w.window.a), db = dir_of(w.window.b);
    Point wa = w.window.a, wb = w.window.b;
    // sweep CCW from da to db
    if (Rat(da.dx * db.dy - da.dy * db.dx) < 0) { std::swap(da, db); std::swap(wa, wb); }
    auto inside_beam = [&](const Ev& d) {
      Rat c1 = da.dx * d.dy - da.dy * d.dx;
      Rat c2 = d.dx * db.dy - d.dy * db.dx;
      return c1 > 0 && c2 > 0;
    };
    std::vector<Ev> evs{da};
    for (const Point& u : P.vertices()) {
      Ev d = dir_of(u);
      if ((d.dx == 0 && d.dy == 0) || !inside_beam(d)) continue;
      evs.push_back(d);
    }
    std::sort(evs.begin() + 1, evs.end(), [&](const Ev& a, const Ev& b) {
      return Rat(a.dx * b.dy - a.dy * b.dx) > 0;
    });
    evs.erase(std::unique(evs.begin(), evs.end(),
                          [](const Ev& a, const Ev& b) {
                            return a.dx * b.dy - a.dy * b.dx == 0;
                          }),
              evs.end());
    evs.push_back(db);

    // far corners per wedge, located on the wedge's single far edge
    std::vector<std::pair<Point, Point>> corners;  // (start-ray corner, end-ray corner)
    bool ok = true;
    for (std::size_t i = 0; i + 1 < evs.size(); ++i) {
      // any positive combination of the wedge's boundary directions points
      // strictly into the open wedge
      Rat mdx = evs[i].dx + evs[i + 1].dx;
      Rat mdy = evs[i].dy + evs[i + 1].dy;
      if (mdx == 0 && mdy == 0) { ok = false; break; }
      Point hm = far_hit(mdx, mdy);
      std::optional<Line> lf;
      for (std::size_t k = 0; k < P.size(); ++k) {
        Segment s = P.edge(k);
        if (on_segment(s.a, s.b, hm)) { lf = line_of(s); break; }
      }
      if (!lf) { ok = false; break; }
      HalfLine r1(vs, evs[i].dx, evs[i].dy), r2(vs, evs[i + 1].dx, evs[i + 1].dy);
      auto t1 = halfline_line_param(r1, *lf);
      auto t2 = halfline_line_param(r2, *lf);
      if (!t1 || !t2 || *t1 < 0 || *t2 < 0) { ok = false; break; }
      corners.emplace_back(r1.eval(*t1), r2.eval(*t2));
    }
    if (!ok || corners.empty()) continue;

    std::vector<Point> ring;
    auto push = [&](const Point& p) {
      if (ring.empty() || !(ring.back() == p)) ring.push_back(p);
    };
    push(wa);
    push(wb);
    for (std::size_t i = corners.size(); i-- > 0;) {
      push(corners[i].second);
      push(corners[i].first);
    }
    while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) continue;
    if (area2(ring) < 0) std::reverse(ring.begin(), ring.end());
    VisibilityRegion r;
    r.boundary = std::move(ring);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<WeakIntervalPair> weak_reflected_intervals(const SimplePolygon& P, const Segment& ed,
                                                       const Segment& uw, int e,
                                                       MirrorCache* cache) {
  std::optional<MirrorCache> local;
  if (!cache) { local.emplace(P); cache = &*local; }
  // events on ed: pullback structure of both uw endpoints plus the window
  // geometry; between consecutive events the visible-portion combinatorics
  // are stable, so emptiness is decided at midpoints.
  std::vector<Rat> ts{Rat(0), Rat(1)};
  for (const Point* v : {&uw.a, &uw.b}) {
    const auto& ent = cache->entry(*v, e);
    for (const Line& l : ent.event_lines) {
      auto t = segment_line_param(ed, l);
      if (t && *t >= 0 && *t <= 1) ts.push_back(*t);
    }
  }
  // vertex-image lines: reflections of lines through (vertex, uw endpoint)
  // and (vertex, vertex) pairs across the mirror line capture the remaining
  // combinatorial changes of the portion boundaries.
  Line L = line_of(P.edge(e));
  std::vector<Point> pivots(P.vertices().begin(), P.vertices().end());
  pivots.push_back(uw.a);
  pivots.push_back(uw.b);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = i + 1; j < pivots.size(); ++j) {
      if (pivots[i] == pivots[j]) continue;
      Line l = line_through(reflect_point(pivots[i], L), pivots[j]);
      auto t = segment_line_param(ed, l);
      if (t && *t >= 0 && *t <= 1) ts.push_back(*t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto portion = [&](const Rat& t) {
    return cache->pullback(ed.eval(t), e, uw);
  };

  struct Comp {
    Rat lo, hi;
    Rat plo, phi;
    bool any = false;
  };
  std::vector<WeakIntervalPair> out;
  std::optional<Comp> cur;
  auto absorb = [&](Comp& c, const std::vector<std::pair<Rat, Rat>>& parts) {
    for (const auto& [a, b] : parts) {
      if (!c.any) { c.plo = a; c.phi = b; c.any = true; }
      else { c.plo = std::min(c.plo, a); c.phi = std::max(c.phi, b); }
    }
  };
  auto flush = [&](Comp& c) {
    WeakIntervalPair pr;
    pr.source = IntervalOnSegment(ed, Scalar(c.lo), Scalar(c.hi));
    pr.target = IntervalOnSegment(uw, Scalar(c.plo), Scalar(c.phi));
    out.push_back(std::move(pr));
  };
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    auto parts = portion(mid);
    if (!parts.empty()) {
      if (!cur) { cur = Comp{ts[i], ts[i + 1], Rat(0), Rat(0), false}; }
      else cur->hi = ts[i + 1];
      absorb(*cur, parts);
      // sample the event endpoints too: extremes occur there
      absorb(*cur, portion(ts[i]));
      absorb(*cur, portion(ts[i + 1]));
    } else if (cur) {
      flush(*cur);
      cur.reset();
    }
  }
  if (cur) flush(*cur);
  return out;
}

}  // namespace specguard
