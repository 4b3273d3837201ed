#pragma once

#include "specguard/rational.hpp"

#include <iosfwd>
#include <variant>
#include <vector>

namespace specguard {

/// Exact sign of r + b1*sqrt(D1) + b2*sqrt(D2), D1,D2 >= 0.
int sign_with_radicals(const Rat& r, const Rat& b1, const Int& D1, const Rat& b2, const Int& D2);

/// Exact sign of a + b*sqrt(D), D >= 0.
inline int sign_with_radical(const Rat& a, const Rat& b, const Int& D) {
  return sign_with_radicals(a, b, D, Rat(0), Int(0));
}

/// A real root of A·x² + B·x + C (A != 0) with rational coefficients.
/// Field layout follows the engine's scalar contract: defining coefficients,
/// root index (0 = smaller root, 1 = larger) and an isolating interval that
/// contains exactly this root.
struct AlgebraicScalar {
  Rat A, B, C;
  int root_index = 0;
  Rat iso_lo, iso_hi;

  AlgebraicScalar() : A(1), B(0), C(0) {}
  AlgebraicScalar(Rat a, Rat b, Rat c, int index);

  /// Value as q + s*sqrt(D): returns {q, s, D}.
  struct Surd {
    Rat q, s;
    Int D;
  };
  Surd surd() const;

  Rat discriminant() const { return B * B - 4 * A * C; }

  /// Exact: sign(value - r).
  int compare(const Rat& r) const;
  int compare(const AlgebraicScalar& o) const;

  bool is_rational() const;
  Rat rational_value() const;  // pre: is_rational()

  /// Shrink the isolating interval by bisection until width <= eps.
  void refine(const Rat& eps);

  double approx() const;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a);

/// Exact scalar: arbitrary-precision rational, or a quadratic algebraic number
/// (the latter only ever produced by dmvm processing).
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  Scalar(Rat r) : v_(std::move(r)) {}
  Scalar(long long n) : v_(Rat(n)) {}
  Scalar(AlgebraicScalar a);

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rational() const { return std::get<Rat>(v_); }
  const AlgebraicScalar& algebraic() const { return std::get<AlgebraicScalar>(v_); }

  int compare(const Scalar& o) const;
  int compare(const Rat& r) const;

  bool operator==(const Scalar& o) const { return compare(o) == 0; }
  bool operator!=(const Scalar& o) const { return compare(o) != 0; }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  /// Closest rational at distance <= eps (identity for rationals).
  Rat rational_near(const Rat& eps) const;
  /// Rational bounds with hi - lo <= eps and lo <= value <= hi.
  std::pair<Rat, Rat> rational_bounds(const Rat& eps) const;

  double approx() const;

 private:
  std::variant<Rat, AlgebraicScalar> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact real roots of A·x²+B·x+C in increasing order. Handles the linear
/// (A == 0) and degenerate cases; rational roots come back rational.
std::vector<Scalar> solve_quadratic(const Rat& A, const Rat& B, const Rat& C);

}  // namespace specguard
