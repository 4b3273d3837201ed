#include "specguard/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>

namespace specguard {

namespace {

constexpr std::int64_t kSmallLimit = (std::int64_t(1) << 40);

inline bool small_enough(std::int64_t v) { return v > -kSmallLimit && v < kSmallLimit; }

using i128 = __int128;

inline int sign128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

void Point::refresh_cache() {
  hw = 0;
  const Int& nx = numerator(x);
  const Int& dx = denominator(x);
  const Int& ny = numerator(y);
  const Int& dy = denominator(y);
  if (!fits_i64(nx) || !fits_i64(dx) || !fits_i64(ny) || !fits_i64(dy)) return;
  std::int64_t inx = to_i64(nx), idx = to_i64(dx), iny = to_i64(ny), idy = to_i64(dy);
  std::int64_t g = std::gcd(idx, idy);
  i128 w = i128(idx) * (idy / g);
  if (w >= kSmallLimit) return;
  i128 px = i128(inx) * (idy / g);
  i128 py = i128(iny) * (idx / g);
  if (px <= -kSmallLimit || px >= kSmallLimit) return;
  if (py <= -kSmallLimit || py >= kSmallLimit) return;
  hx = static_cast<std::int64_t>(px);
  hy = static_cast<std::int64_t>(py);
  hw = static_cast<std::int64_t>(w);
}

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::size_t hash_point(const Point& p) {
  return hash_combine(hash_rat(p.x), hash_rat(p.y));
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

Line::Line(Int aa, Int bb, Int cc) : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)) {
  Int g = gcd(gcd(abs(a), abs(b)), abs(c));
  if (g > 1) { a /= g; b /= g; c /= g; }
  int lead = a != 0 ? sign_of(a) : sign_of(b);
  if (lead < 0) { a = -a; b = -b; c = -c; }
  small_ = fits_i64(a) && fits_i64(b) && fits_i64(c);
  if (small_) {
    sa = to_i64(a); sb = to_i64(b); sc = to_i64(c);
    small_ = small_enough(sa) && small_enough(sb) && small_enough(sc);
  }
}

bool Line::operator<(const Line& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::size_t hash_line(const Line& l) {
  return hash_combine(hash_int(l.a), hash_combine(hash_int(l.b), hash_int(l.c)));
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  if (p.small() && q.small() && r.small()) {
    // det of homogeneous rows; all weights positive so the sign transfers.
    i128 m00 = i128(q.hy) * r.hw - i128(r.hy) * q.hw;
    i128 m01 = i128(q.hx) * r.hw - i128(r.hx) * q.hw;
    i128 m02 = i128(q.hx) * r.hy - i128(r.hx) * q.hy;
    i128 det = i128(p.hx) * m00 - i128(p.hy) * m01 + i128(p.hw) * m02;
    int s = sign128(det);
    return static_cast<Orientation>(s);
  }
  Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(sign_of(det));
}

int line_side(const Line& l, const Point& p) {
  if (l.small() && p.small()) {
    i128 v = i128(l.sa) * p.hx + i128(l.sb) * p.hy + i128(l.sc) * p.hw;
    return sign128(v);
  }
  Rat v = Rat(l.a) * p.x + Rat(l.b) * p.y + Rat(l.c);
  return sign_of(v);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return orientation(p, q, r) == Orientation::Collinear;
}

bool on_segment(const Point& a, const Point& b, const Point& q) {
  if (!collinear(a, b, q)) return false;
  if (a.x != b.x) {
    return (q.x >= std::min(a.x, b.x)) && (q.x <= std::max(a.x, b.x));
  }
  return (q.y >= std::min(a.y, b.y)) && (q.y <= std::max(a.y, b.y));
}

Rat dist2(const Point& a, const Point& b) {
  Rat dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Line line_through(const Point& p, const Point& q) {
  // Cross product of homogeneous coordinates, cleared to integers.
  Int pd = Int(denominator(p.x)) * Int(denominator(p.y));
  Int qx_n = numerator(q.x), qx_d = denominator(q.x);
  Int qy_n = numerator(q.y), qy_d = denominator(q.y);
  // p as (pxn*pyd, pyn*pxd, pxd*pyd), q likewise.
  Int px = Int(numerator(p.x)) * Int(denominator(p.y));
  Int py = Int(numerator(p.y)) * Int(denominator(p.x));
  Int pw = pd;
  Int qx = qx_n * qy_d;
  Int qy = qy_n * qx_d;
  Int qw = qx_d * qy_d;
  Int a = py * qw - qy * pw;
  Int b = qx * pw - px * qw;
  Int c = px * qy - qx * py;
  return Line(std::move(a), std::move(b), std::move(c));
}

Line line_of(const Segment& s) { return line_through(s.a, s.b); }

Line line_of(const HalfLine& h) {
  Point second(h.origin.x + h.dx, h.origin.y + h.dy);
  return line_through(h.origin, second);
}

LineIntersection intersect_lines(const Line& l1, const Line& l2) {
  Int det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) {
    // canonical form: identical lines are bitwise equal
    if (l1 == l2) return Identical{};
    return Parallel{};
  }
  Rat x(l1.b * l2.c - l2.b * l1.c, det);
  Rat y(l2.a * l1.c - l1.a * l2.c, det);
  return Point(std::move(x), std::move(y));
}

Point reflect_point(const Point& p, const Line& l) {
  Rat a(l.a), b(l.b), c(l.c);
  Rat denom = a * a + b * b;
  Rat t = (a * p.x + b * p.y + c) / denom;
  return Point(p.x - 2 * t * a, p.y - 2 * t * b);
}

std::optional<Rat> segment_line_param(const Segment& s, const Line& l) {
  Rat fa = Rat(l.a) * s.a.x + Rat(l.b) * s.a.y + Rat(l.c);
  Rat fb = Rat(l.a) * s.b.x + Rat(l.b) * s.b.y + Rat(l.c);
  Rat diff = fa - fb;
  if (diff == 0) return std::nullopt;  // parallel (or on the line)
  return fa / diff;
}

std::optional<Rat> halfline_line_param(const HalfLine& h, const Line& l) {
  Rat d = Rat(l.a) * h.dx + Rat(l.b) * h.dy;
  if (d == 0) return std::nullopt;
  Rat f = Rat(l.a) * h.origin.x + Rat(l.b) * h.origin.y + Rat(l.c);
  return -f / d;
}

bool segments_cross_properly(const Segment& s1, const Segment& s2) {
  Orientation o1 = orientation(s1.a, s1.b, s2.a);
  Orientation o2 = orientation(s1.a, s1.b, s2.b);
  Orientation o3 = orientation(s2.a, s2.b, s1.a);
  Orientation o4 = orientation(s2.a, s2.b, s1.b);
  return o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
         o3 != Orientation::Collinear && o4 != Orientation::Collinear &&
         o1 != o2 && o3 != o4;
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  if (segments_cross_properly(s1, s2)) return true;
  return on_segment(s1.a, s1.b, s2.a) || on_segment(s1.a, s1.b, s2.b) ||
         on_segment(s2.a, s2.b, s1.a) || on_segment(s2.a, s2.b, s1.b);
}

int compare_directions(const Rat& dx1, const Rat& dy1, const Rat& dx2, const Rat& dy2) {
  auto half = [](const Rat& dx, const Rat& dy) {
    // 0 for angle in [0, pi) (dy>0, or dy==0 && dx>0), 1 otherwise.
    int sy = sign_of(dy);
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return sign_of(dx) > 0 ? 0 : 1;
  };
  int h1 = half(dx1, dy1), h2 = half(dx2, dy2);
  if (h1 != h2) return h1 < h2 ? -1 : 1;
  Rat cross = dx1 * dy2 - dy1 * dx2;
  int s = sign_of(cross);
  return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

}  // namespace specguard
