#include "specguard/algebraic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace specguard {

namespace {

// sign of b*sqrt(D) + c*sqrt(E) with both terms nonzero and opposite signs
int sign_opposed_radicals(const Rat& b, const Int& D, const Rat& c, const Int& E) {
  Rat lhs = b * b * Rat(D);
  Rat rhs = c * c * Rat(E);
  int cmp = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  if (cmp == 0) return 0;
  // the larger magnitude wins
  return cmp > 0 ? sign_of(b) : sign_of(c);
}

bool is_perfect_square(const Int& v, Int& root) {
  if (v < 0) return false;
  root = sqrt(v);
  return root * root == v;
}

}  // namespace

int sign_with_radicals(const Rat& r, const Rat& b1_in, const Int& D1_in, const Rat& b2_in, const Int& D2_in) {
  Rat b1 = b1_in, b2 = b2_in;
  Int D1 = D1_in, D2 = D2_in;
  if (D1 == 0) b1 = 0;
  if (D2 == 0) b2 = 0;
  // collapse perfect squares into the rational part
  Rat rr = r;
  Int root;
  if (b1 != 0 && is_perfect_square(D1, root)) { rr += b1 * Rat(root); b1 = 0; }
  if (b2 != 0 && is_perfect_square(D2, root)) { rr += b2 * Rat(root); b2 = 0; }
  if (b1 != 0 && b2 != 0 && D1 == D2) { b1 += b2; b2 = 0; }

  if (b1 == 0 && b2 == 0) return sign_of(rr);
  if (b1 == 0) { b1 = b2; D1 = D2; b2 = 0; }

  if (b2 == 0) {
    // rr + b1*sqrt(D1)
    if (rr == 0) return sign_of(b1);
    int sr = sign_of(rr), sb = sign_of(b1);
    if (sr == sb) return sr;
    Rat lhs = rr * rr;
    Rat rhs = b1 * b1 * Rat(D1);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sr : sb;
  }

  // rr + b1*sqrt(D1) + b2*sqrt(D2), both radicals live
  int s1 = sign_of(b1), s2 = sign_of(b2);
  int st;  // sign of the radical sum T
  if (s1 == s2) st = s1;
  else st = sign_opposed_radicals(b1, D1, b2, D2);

  if (rr == 0) return st;
  int sr = sign_of(rr);
  if (st == 0 || sr == st) return sr;
  // opposite: sign(rr + T) = sr * sign(rr^2 - T^2)
  // T^2 = b1^2 D1 + b2^2 D2 + 2 b1 b2 sqrt(D1 D2)
  Rat base = rr * rr - b1 * b1 * Rat(D1) - b2 * b2 * Rat(D2);
  Rat coef = -2 * b1 * b2;
  int inner = sign_with_radicals(base, coef, D1 * D2, Rat(0), Int(0));
  return sr * inner;
}

AlgebraicScalar::AlgebraicScalar(Rat a, Rat b, Rat c, int index)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), root_index(index) {
  if (A == 0) throw std::invalid_argument("AlgebraicScalar: A must be nonzero");
  Rat disc = discriminant();
  if (disc < 0) throw std::invalid_argument("AlgebraicScalar: no real roots");
  // midpoint of the parabola separates the two roots
  Rat mid = -B / (2 * A);
  if (disc == 0) { iso_lo = mid; iso_hi = mid; return; }
  // Cauchy-style bound: strictly encloses both roots, so [mid-bound, mid]
  // (resp. [mid, mid+bound]) isolates the requested one. mid itself is never
  // a root when disc > 0.
  Rat bound = 2 + rat_abs(B / A) + rat_abs(C / A);
  if (root_index == 0) { iso_lo = mid - bound; iso_hi = mid; }
  else { iso_lo = mid; iso_hi = mid + bound; }
}

AlgebraicScalar::Surd AlgebraicScalar::surd() const {
  Rat disc = discriminant();
  // sqrt(p/q) = sqrt(p*q)/q
  Int p = numerator(disc), q = denominator(disc);
  Int D = p * q;
  Rat mag = Rat(1, q) / (2 * A);  // (+sqrt branch) coefficient
  Rat mid = -B / (2 * A);
  // smaller root takes the branch that subtracts sqrt/|2A|
  bool plus_is_larger = sign_of(A) > 0;
  bool want_larger = root_index == 1;
  Rat s = (plus_is_larger == want_larger) ? mag : -mag;
  return Surd{mid, s, D};
}

int AlgebraicScalar::compare(const Rat& r) const {
  Surd s = surd();
  return sign_with_radical(s.q - r, s.s, s.D);
}

int AlgebraicScalar::compare(const AlgebraicScalar& o) const {
  Surd s1 = surd(), s2 = o.surd();
  return sign_with_radicals(s1.q - s2.q, s1.s, s1.D, -s2.s, s2.D);
}

bool AlgebraicScalar::is_rational() const {
  Surd s = surd();
  Int root;
  return s.s == 0 || is_perfect_square(s.D, root);
}

Rat AlgebraicScalar::rational_value() const {
  Surd s = surd();
  if (s.s == 0) return s.q;
  Int root;
  if (!is_perfect_square(s.D, root)) throw std::logic_error("not rational");
  return s.q + s.s * Rat(root);
}

void AlgebraicScalar::refine(const Rat& eps) {
  if (iso_lo == iso_hi) return;
  while (iso_hi - iso_lo > eps) {
    Rat mid = (iso_lo + iso_hi) / 2;
    int c = compare(mid);
    if (c == 0) { iso_lo = mid; iso_hi = mid; return; }
    if (c < 0) iso_hi = mid;  // value < mid
    else iso_lo = mid;
  }
}

double AlgebraicScalar::approx() const {
  Surd s = surd();
  return to_double(s.q) + to_double(s.s) * std::sqrt(s.D.convert_to<double>());
}

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a) {
  return os << "root" << a.root_index << "(" << a.A << "x^2+" << a.B << "x+" << a.C << ")";
}

Scalar::Scalar(AlgebraicScalar a) : v_(Rat(0)) {
  if (a.is_rational()) v_ = a.rational_value();
  else v_ = std::move(a);
}

int Scalar::compare(const Scalar& o) const {
  if (is_rational() && o.is_rational()) {
    const Rat& a = rational();
    const Rat& b = o.rational();
    return a == b ? 0 : (a < b ? -1 : 1);
  }
  if (is_rational()) return -o.algebraic().compare(rational());
  if (o.is_rational()) return algebraic().compare(o.rational());
  return algebraic().compare(o.algebraic());
}

int Scalar::compare(const Rat& r) const {
  if (is_rational()) {
    const Rat& a = rational();
    return a == r ? 0 : (a < r ? -1 : 1);
  }
  return algebraic().compare(r);
}

Rat Scalar::rational_near(const Rat& eps) const {
  if (is_rational()) return rational();
  AlgebraicScalar a = algebraic();
  a.refine(eps);
  return (a.iso_lo + a.iso_hi) / 2;
}

std::pair<Rat, Rat> Scalar::rational_bounds(const Rat& eps) const {
  if (is_rational()) return {rational(), rational()};
  AlgebraicScalar a = algebraic();
  a.refine(eps);
  return {a.iso_lo, a.iso_hi};
}

double Scalar::approx() const {
  return is_rational() ? to_double(rational()) : algebraic().approx();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.is_rational()) return os << s.rational();
  return os << s.algebraic();
}

std::vector<Scalar> solve_quadratic(const Rat& A, const Rat& B, const Rat& C) {
  std::vector<Scalar> roots;
  if (A == 0) {
    if (B == 0) return roots;  // constant: no isolated roots (or identically 0)
    roots.emplace_back(Rat(-C / B));
    return roots;
  }
  Rat disc = B * B - 4 * A * C;
  if (disc < 0) return roots;
  if (disc == 0) {
    roots.emplace_back(Rat(-B / (2 * A)));
    return roots;
  }
  AlgebraicScalar lo(A, B, C, 0), hi(A, B, C, 1);
  roots.emplace_back(lo);
  roots.emplace_back(hi);
  return roots;
}

}  // namespace specguard
