#include "specguard/arrangement.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace specguard {

namespace {

struct LineHash {
  std::size_t operator()(const Line& l) const { return hash_line(l); }
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return hash_point(p); }
};

}  // namespace

std::vector<Line> generate_lines(const SimplePolygon& P, std::size_t cap) {
  std::unordered_set<Line, LineHash> set;
  std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      set.insert(line_through(P.vertex(i), P.vertex(j)));

  std::vector<Line> step1(set.begin(), set.end());
  std::unordered_set<Point, PointHash> pts;
  for (std::size_t i = 0; i < step1.size(); ++i) {
    for (std::size_t j = i + 1; j < step1.size(); ++j) {
      auto r = intersect_lines(step1[i], step1[j]);
      if (std::holds_alternative<Point>(r)) pts.insert(std::get<Point>(std::move(r)));
    }
  }
  for (int rv : reflex_vertices(P)) {
    const Point& v = P.vertex(rv);
    for (const Point& p : pts) {
      if (p == v) continue;
      set.insert(line_through(p, v));
      if (set.size() > cap) throw LineBudgetExceeded(cap, set.size());
    }
  }
  if (set.size() > cap) throw LineBudgetExceeded(cap, set.size());
  std::vector<Line> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

ScrSet build_scr(const SimplePolygon& P, std::size_t cap) {
  ScrSet scr;
  scr.generating_lines = generate_lines(P, cap);
  const std::vector<Line>& lines = scr.generating_lines;

  // padded bounding box of the polygon: arrangement vertices outside of it
  // cannot bound a face inside P
  Rat xmin = P.vertex(0).x, xmax = xmin, ymin = P.vertex(0).y, ymax = ymin;
  for (const Point& v : P.vertices()) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  xmin -= 1; ymin -= 1; xmax += 1; ymax += 1;

  std::vector<Point> verts;
  std::unordered_map<Point, int, PointHash> vid;
  auto intern = [&](const Point& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(verts.size());
    verts.push_back(p);
    vid.emplace(p, id);
    return id;
  };

  std::vector<std::vector<int>> on_line(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto r = intersect_lines(lines[i], lines[j]);
      if (!std::holds_alternative<Point>(r)) continue;
      Point p = std::get<Point>(std::move(r));
      if (p.x < xmin || p.x > xmax || p.y < ymin || p.y > ymax) continue;
      int id = intern(p);
      on_line[i].push_back(id);
      on_line[j].push_back(id);
    }
  }

  // undirected edges: consecutive vertices along each line
  struct Half {
    int from, to;
    int twin = -1, next = -1;
    bool used = false;
  };
  std::vector<Half> halves;
  std::vector<std::vector<int>> out_edges(verts.size());
  auto add_edge = [&](int u, int v) {
    int h1 = static_cast<int>(halves.size());
    halves.push_back({u, v});
    int h2 = static_cast<int>(halves.size());
    halves.push_back({v, u});
    halves[h1].twin = h2;
    halves[h2].twin = h1;
    out_edges[u].push_back(h1);
    out_edges[v].push_back(h2);
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto& ids = on_line[i];
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return lex_less(verts[a], verts[b]); });
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) add_edge(ids[k], ids[k + 1]);
  }

  // rotational order of outgoing half-edges at every vertex
  for (std::size_t v = 0; v < verts.size(); ++v) {
    auto& outs = out_edges[v];
    std::sort(outs.begin(), outs.end(), [&](int a, int b) {
      const Point& pa = verts[halves[a].to];
      const Point& pb = verts[halves[b].to];
      const Point& o = verts[v];
      return compare_directions(pa.x - o.x, pa.y - o.y, pb.x - o.x, pb.y - o.y) < 0;
    });
  }
  // Face-on-the-left traversal: arriving along h we leave through the
  // rotational predecessor of twin(h) among the edges out of head(h).
  for (std::size_t v = 0; v < verts.size(); ++v) {
    auto& outs = out_edges[v];
    std::size_t m = outs.size();
    for (std::size_t k = 0; k < m; ++k) {
      int o = outs[k];
      int pred = outs[(k + m - 1) % m];
      halves[halves[o].twin].next = pred;
    }
  }

  // face extraction
  std::vector<ConvexCell> cells;
  for (std::size_t h0 = 0; h0 < halves.size(); ++h0) {
    if (halves[h0].used) continue;
    std::vector<int> cycle;
    int h = static_cast<int>(h0);
    bool broken = false;
    while (!halves[h].used) {
      halves[h].used = true;
      cycle.push_back(h);
      h = halves[h].next;
      if (h < 0) { broken = true; break; }
    }
    if (broken || h != static_cast<int>(h0)) continue;
    if (cycle.size() < 3) continue;
    std::vector<Point> ring;
    ring.reserve(cycle.size());
    for (int he : cycle) ring.push_back(verts[halves[he].from]);
    if (area2(ring) <= 0) continue;  // outer/bounce orbits
    ConvexCell cell = make_cell(std::move(ring));
    if (cell.boundary.size() < 3 || area2(cell) <= 0) continue;
    if (classify_point(P, vertex_centroid(cell)) != PointClass::Interior) continue;
    cells.push_back(std::move(cell));
  }

  // deterministic ids: lexicographic by canonical first vertex, then ring
  std::sort(cells.begin(), cells.end(), [](const ConvexCell& a, const ConvexCell& b) {
    std::size_t n = std::min(a.boundary.size(), b.boundary.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.boundary[i] == b.boundary[i]) continue;
      return lex_less(a.boundary[i], b.boundary[i]);
    }
    return a.boundary.size() < b.boundary.size();
  });

  // provenance: generating line of every cell edge + polygon-boundary flag
  std::unordered_map<Line, int, LineHash> line_ids;
  for (std::size_t i = 0; i < lines.size(); ++i) line_ids.emplace(lines[i], static_cast<int>(i));
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    ConvexCell& c = cells[ci];
    c.id = static_cast<int>(ci);
    c.prov.resize(c.boundary.size());
    for (std::size_t ei = 0; ei < c.boundary.size(); ++ei) {
      Segment s = c.edge(ei);
      Line l = line_of(s);
      auto it = line_ids.find(l);
      c.prov[ei].line_id = it != line_ids.end() ? it->second : -1;
      Point mid(Rat((s.a.x + s.b.x) / 2), Rat((s.a.y + s.b.y) / 2));
      c.prov[ei].on_polygon = classify_point(P, mid) == PointClass::Boundary;
    }
  }
  scr.cells = std::move(cells);
  return scr;
}

}  // namespace specguard
