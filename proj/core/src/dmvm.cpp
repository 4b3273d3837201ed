#include "specguard/dmvm.hpp"

#include "specguard/polygon.hpp"

#include <algorithm>

namespace specguard {

namespace {

Rat cross2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
  return ax * by - ay * bx;
}

/// value of a + b*t at an exact scalar, as an exact scalar
Scalar scalar_affine(const Rat& a, const Rat& b, const Scalar& t) {
  if (t.is_rational()) return Scalar(a + b * t.rational());
  auto surd = t.algebraic().surd();  // q + s*sqrt(D)
  Rat p = a + b * surd.q;
  Rat r = b * surd.s;
  if (r == 0) return Scalar(p);
  // minimal polynomial of p + r*sqrt(D): x^2 - 2p x + (p^2 - r^2 D)
  AlgebraicScalar v(Rat(1), -2 * p, p * p - r * r * Rat(surd.D), r > 0 ? 1 : 0);
  return Scalar(v);
}

}  // namespace

ProjEndpoint projective_endpoint(const Point& p0, const Rat& dirx, const Rat& diry,
                                 const Point& pivot, const Segment& uw) {
  // s(t) solves collinear(center(t), pivot, uw(s)).
  // cross(pivot - center, uw.a + s*e - center) = 0 with center = p0 + t*dir:
  //   s(t) = -cross(A - tB, C - tB) / cross(A - tB, E)
  // with A = pivot-p0, B = dir, C = uw.a-p0, E = uw.b-uw.a; numerator and
  // denominator are both linear in t because cross(B,B) = 0.
  Rat Ax = pivot.x - p0.x, Ay = pivot.y - p0.y;
  Rat Bx = dirx, By = diry;
  Rat Cx = uw.a.x - p0.x, Cy = uw.a.y - p0.y;
  Rat Ex = uw.b.x - uw.a.x, Ey = uw.b.y - uw.a.y;
  ProjEndpoint pe;
  Rat n0 = -cross2(Ax, Ay, Cx, Cy);
  Rat n1 = cross2(Ax, Ay, Bx, By) + cross2(Bx, By, Cx, Cy);
  Rat d0 = cross2(Ax, Ay, Ex, Ey);
  Rat d1 = -cross2(Bx, By, Ex, Ey);
  pe.a = n1;
  pe.b = n0;
  pe.c = d1;
  pe.d = d0;
  pe.valid = !(d0 == 0 && d1 == 0);
  return pe;
}

std::vector<Scalar> merge_params(const ProjEndpoint& f, const ProjEndpoint& g) {
  // (f.a t + f.b)(g.c t + g.d) = (g.a t + g.b)(f.c t + f.d)
  Rat A = f.a * g.c - g.a * f.c;
  Rat B = f.a * g.d + f.b * g.c - g.a * f.d - g.b * f.c;
  Rat C = f.b * g.d - g.b * f.d;
  return solve_quadratic(A, B, C);
}

std::optional<Scalar> eval_projective(const ProjEndpoint& pe, const Scalar& t) {
  if (t.is_rational()) {
    auto v = pe.eval(t.rational());
    if (!v) return std::nullopt;
    return Scalar(*v);
  }
  auto surd = t.algebraic().surd();  // q + s*sqrt(D)
  // numerator  = (a q + b) + a s sqrt(D) = N0 + N1 sqrt(D)
  // denominator= (c q + d) + c s sqrt(D) = M0 + M1 sqrt(D)
  Rat N0 = pe.a * surd.q + pe.b, N1 = pe.a * surd.s;
  Rat M0 = pe.c * surd.q + pe.d, M1 = pe.c * surd.s;
  Rat denom = M0 * M0 - M1 * M1 * Rat(surd.D);
  if (denom == 0) return std::nullopt;
  Rat P0 = (N0 * M0 - N1 * M1 * Rat(surd.D)) / denom;
  Rat P1 = (N1 * M0 - N0 * M1) / denom;
  if (P1 == 0) return Scalar(P0);
  AlgebraicScalar v(Rat(1), -2 * P0, P0 * P0 - P1 * P1 * Rat(surd.D), P1 > 0 ? 1 : 0);
  return Scalar(v);
}

std::vector<DmvmPoint> dmvm_points(const SimplePolygon& P, const Segment& ed, const Segment& uw,
                                   int e, MirrorCache* cache) {
  if (!P.is_mirror(e)) throw NotAMirror(e);
  std::optional<MirrorCache> local;
  if (!cache) { local.emplace(P); cache = &*local; }

  Segment me = P.edge(e);
  Line L = line_of(me);
  Point ra = reflect_point(ed.a, L), rb = reflect_point(ed.b, L);
  Rat rdx = rb.x - ra.x, rdy = rb.y - ra.y;
  Rat dx = ed.b.x - ed.a.x, dy = ed.b.y - ed.a.y;

  std::vector<DmvmPoint> out;
  auto reflex = reflex_vertices(P);
  for (int rf_idx : reflex) {
    const Point& rf = P.vertex(rf_idx);
    ProjEndpoint direct = projective_endpoint(ed.a, dx, dy, rf, uw);
    if (!direct.valid) continue;
    for (const Point* v2 : {&me.a, &me.b}) {
      ProjEndpoint mirror = projective_endpoint(ra, rdx, rdy, *v2, uw);
      if (!mirror.valid) continue;
      for (const Scalar& t : merge_params(direct, mirror)) {
        if (t.compare(Rat(0)) < 0 || t.compare(Rat(1)) > 0) continue;
        auto s = eval_projective(direct, t);
        if (!s) continue;
        if (s->compare(Rat(0)) < 0 || s->compare(Rat(1)) > 0) continue;
        DmvmPoint dp;
        dp.mirror = e;
        dp.reflex = rf_idx;
        dp.t = t;
        dp.s = *s;
        dp.position = AlgPoint{scalar_affine(ed.a.x, dx, t), scalar_affine(ed.a.y, dy, t)};
        dp.projection = AlgPoint{scalar_affine(uw.a.x, uw.b.x - uw.a.x, *s),
                                 scalar_affine(uw.a.y, uw.b.y - uw.a.y, *s)};
        // physicality: the reflex pivot must lie strictly between the
        // position and the projection on their common sight line, and the
        // mirror endpoint strictly between the reflected position and the
        // projection. All values live in one quadratic field: thread the
        // radical of t explicitly as (rational, rational) pairs.
        {
          Rat tq, ts_;
          Int D(0);
          if (t.is_rational()) {
            tq = t.rational();
            ts_ = 0;
          } else {
            auto sd = t.algebraic().surd();
            tq = sd.q; ts_ = sd.s; D = sd.D;
          }
          struct Pair { Rat q, s; };
          auto padd = [](const Pair& a, const Pair& b) { return Pair{a.q + b.q, a.s + b.s}; };
          auto psub = [](const Pair& a, const Pair& b) { return Pair{a.q - b.q, a.s - b.s}; };
          auto pmul = [&D](const Pair& a, const Pair& b) {
            return Pair{a.q * b.q + a.s * b.s * Rat(D), a.q * b.s + a.s * b.q};
          };
          auto pconst = [](const Rat& r) { return Pair{r, Rat(0)}; };
          auto psign = [&D](const Pair& a) { return sign_with_radical(a.q, a.s, D); };
          Pair tpair{tq, ts_};
          // s as a pair via the projective form of the direct endpoint
          Pair num = padd(pconst(direct.b), Pair{direct.a * tq, direct.a * ts_});
          Pair den = padd(pconst(direct.d), Pair{direct.c * tq, direct.c * ts_});
          if (psign(den) == 0) continue;
          // q-point = uw.a + s*(uw.b-uw.a); clear the denominator: work with
          // homогeneous (alpha + s*beta) * den = alpha*den + num*beta
          auto affine_h = [&](const Rat& base, const Rat& delta) {
            // (base + s*delta) * den
            return padd(pmul(pconst(base), den), pmul(num, pconst(delta)));
          };
          Pair qx_h = affine_h(uw.a.x, uw.b.x - uw.a.x);
          Pair qy_h = affine_h(uw.a.y, uw.b.y - uw.a.y);
          // p1 and its reflection (exact pairs, unscaled)
          Pair p1x = padd(pconst(ed.a.x), pmul(pconst(dx), tpair));
          Pair p1y = padd(pconst(ed.a.y), pmul(pconst(dy), tpair));
          Pair prx = padd(pconst(ra.x), pmul(pconst(rdx), tpair));
          Pair pry = padd(pconst(ra.y), pmul(pconst(rdy), tpair));
          int sden = psign(den);
          auto between_strict = [&](const Pair& ax, const Pair& ay) {
            // pivot (rf or v2) strictly between (ax,ay) and the q-point.
            // scale the anchor by den so both ends share the factor:
            Pair axh = pmul(ax, den), ayh = pmul(ay, den);
            // direction w = q_h - a_h, v = pivot*den - a_h
            return [&, axh, ayh](const Point& pivot) {
              Pair vx = psub(pmul(pconst(pivot.x), den), axh);
              Pair vy = psub(pmul(pconst(pivot.y), den), ayh);
              Pair wx = psub(qx_h, axh), wy = psub(qy_h, ayh);
              Pair dot = padd(pmul(vx, wx), pmul(vy, wy));
              Pair v2n = padd(pmul(vx, vx), pmul(vy, vy));
              Pair w2n = padd(pmul(wx, wx), pmul(wy, wy));
              Pair gap = psub(w2n, v2n);
              return psign(dot) > 0 && psign(gap) > 0;
            };
          };
          (void)sden;
          if (!between_strict(p1x, p1y)(rf)) continue;
          if (!between_strict(prx, pry)(*v2)) continue;
        }
        out.push_back(std::move(dp));
      }
    }
  }
  // canonical order: by parameter on ed, then mirror endpoint side, reflex
  std::sort(out.begin(), out.end(), [](const DmvmPoint& a, const DmvmPoint& b) {
    int c = a.t.compare(b.t);
    if (c != 0) return c < 0;
    if (a.reflex != b.reflex) return a.reflex < b.reflex;
    return a.s.compare(b.s) < 0;
  });
  return out;
}

}  // namespace specguard
