#include "doctest.h"
#include "support.hpp"

#include "specguard/algebraic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

using namespace specguard;
using testsup::Rng;

using F100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

namespace {

F100 to_f100(const Rat& r) {
  return F100(numerator(r).str()) / F100(denominator(r).str());
}

F100 root_f100(const Rat& A, const Rat& B, const Rat& C, int index) {
  F100 a = to_f100(A), b = to_f100(B), c = to_f100(C);
  F100 disc = b * b - 4 * a * c;
  F100 s = sqrt(disc);
  F100 r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
  if (r1 > r2) std::swap(r1, r2);
  return index == 0 ? r1 : r2;
}

}  // namespace

TEST_CASE("quadratic roots: ordering, isolation, exact comparisons") {
  Rng rng(2024);
  int produced = 0;
  while (produced < 1000) {
    Rat A = testsup::rat(rng, 12, 5);
    Rat B = testsup::rat(rng, 12, 5);
    Rat C = testsup::rat(rng, 12, 5);
    if (A == 0) continue;
    Rat disc = B * B - 4 * A * C;
    if (disc <= 0) continue;
    for (int idx = 0; idx < 2; ++idx) {
      AlgebraicScalar r(A, B, C, idx);
      ++produced;
      // defining polynomial sign flips across the isolating interval
      CHECK(r.iso_lo <= r.iso_hi);
      CHECK(r.compare(r.iso_lo) >= 0);
      CHECK(r.compare(r.iso_hi) <= 0);

      // 100-digit numeric oracle agreement for comparisons vs rationals
      F100 ref = root_f100(A, B, C, idx);
      for (int k = 0; k < 3; ++k) {
        Rat probe = testsup::rat(rng, 15, 7);
        int exact = r.compare(probe);
        F100 diff = ref - to_f100(probe);
        if (abs(diff) > F100("1e-60")) {
          int approx = diff > 0 ? 1 : -1;
          CHECK(exact == approx);
        }
      }
    }
    // root0 < root1 exactly
    AlgebraicScalar lo(A, B, C, 0), hi(A, B, C, 1);
    CHECK(lo.compare(hi) < 0);
    CHECK(hi.compare(lo) > 0);
    CHECK(lo.compare(lo) == 0);
  }
}

TEST_CASE("algebraic-vs-algebraic comparisons match the numeric oracle") {
  Rng rng(77);
  int done = 0;
  while (done < 400) {
    Rat A1 = testsup::rat(rng, 9, 4), B1 = testsup::rat(rng, 9, 4), C1 = testsup::rat(rng, 9, 4);
    Rat A2 = testsup::rat(rng, 9, 4), B2 = testsup::rat(rng, 9, 4), C2 = testsup::rat(rng, 9, 4);
    if (A1 == 0 || A2 == 0) continue;
    if (B1 * B1 - 4 * A1 * C1 <= 0) continue;
    if (B2 * B2 - 4 * A2 * C2 <= 0) continue;
    int i1 = static_cast<int>(rng.next() % 2), i2 = static_cast<int>(rng.next() % 2);
    AlgebraicScalar r1(A1, B1, C1, i1), r2(A2, B2, C2, i2);
    F100 f1 = root_f100(A1, B1, C1, i1), f2 = root_f100(A2, B2, C2, i2);
    int exact = r1.compare(r2);
    F100 diff = f1 - f2;
    if (abs(diff) > F100("1e-60")) {
      CHECK(exact == (diff > 0 ? 1 : -1));
    } else {
      // numerically indistinguishable: must be exactly equal
      CHECK(exact == 0);
    }
    ++done;
  }
}

TEST_CASE("equal roots from different polynomials compare equal") {
  // x^2 - 2 and 2x^2 - 4 share sqrt(2)
  AlgebraicScalar a(Rat(1), Rat(0), Rat(-2), 1);
  AlgebraicScalar b(Rat(2), Rat(0), Rat(-4), 1);
  CHECK(a.compare(b) == 0);
  // sqrt(2) vs the root of (x-1)(x-2) = x^2-3x+2 smaller root (=1)
  AlgebraicScalar one(Rat(1), Rat(-3), Rat(2), 0);
  CHECK(a.compare(one) > 0);
  CHECK(one.is_rational());
  CHECK(one.rational_value() == 1);
}

TEST_CASE("Scalar collapses rational-valued algebraics and refines bounds") {
  auto roots = solve_quadratic(Rat(1), Rat(-3), Rat(2));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].is_rational());
  CHECK(roots[0].rational() == 1);
  CHECK(roots[1].rational() == 2);

  auto irr = solve_quadratic(Rat(1), Rat(0), Rat(-2));
  REQUIRE(irr.size() == 2);
  CHECK(!irr[1].is_rational());
  Rat eps(1, Int(1) << 60);
  auto [lo, hi] = irr[1].rational_bounds(eps);
  CHECK(hi - lo <= eps);
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);

  auto none = solve_quadratic(Rat(1), Rat(0), Rat(1));
  CHECK(none.empty());
  auto lin = solve_quadratic(Rat(0), Rat(2), Rat(-5));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].rational() == Rat(5, 2));
}

TEST_CASE("Scalar total order is consistent") {
  Rng rng(5150);
  for (int it = 0; it < 200; ++it) {
    Rat A = testsup::rat(rng, 7, 3);
    if (A == 0) continue;
    Rat B = testsup::rat(rng, 7, 3), C = testsup::rat(rng, 7, 3);
    auto roots = solve_quadratic(A, B, C);
    Rat probe = testsup::rat(rng, 10, 4);
    Scalar sp(probe);
    for (auto& r : roots) {
      int c1 = r.compare(sp), c2 = sp.compare(r);
      CHECK(c1 == -c2);
      CHECK((r < sp) == (c1 < 0));
      CHECK((r == sp) == (c1 == 0));
    }
  }
}
