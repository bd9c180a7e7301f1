#include <doctest.h>

#include "scatterlab/error.hpp"
#include "scatterlab/semantics.hpp"

#include <random>

using namespace scatterlab;

namespace {

Rat R(long p, long q = 1) { return Rat(p, q); }

// Digit-by-digit ternary oracle: reject on a 1 unless it is the final digit
// of a terminating expansion (then ...1 = ...0222).
bool cantor_oracle(Rat u, int digits = 30) {
  if (u < 0 || u > 1) return false;
  for (int i = 0; i < digits; ++i) {
    Rat t = u * 3;
    mpz_class d = floor(t);
    Rat rest = t - from_integer(d);
    if (d == 1) return rest == 0;
    if (d == 3) return rest == 0;  // u == 1
    u = rest;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals round-trip through text") {
  CHECK(Rat::parse("3/6").str() == "1/2");
  CHECK(Rat::parse("-4").str() == "-4/1");
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK(pow(R(1, 2), -3) == R(8));
}

TEST_CASE("membership examples") {
  CHECK(member(interval(0, 1), R(1, 2)));
  CHECK(member(cantor(0, 1), R(1, 4)));
  CHECK(cantor_oracle(R(1, 4)));
  Term lad = ladder(1, 1, R(1, 2), true);
  CHECK(member(lad, R(3, 4)));
  CHECK_FALSE(member(lad, R(2, 3)));
  CHECK(member(lad, 1));
  CHECK_FALSE(member(ladder(1, 1, R(1, 2), false), 1));
  CHECK_FALSE(member(interval(0, 1, true), 0));
}

TEST_CASE("cantor membership agrees with the digit oracle") {
  for (long q = 1; q <= 60; ++q)
    for (long p = 0; p <= q; ++p) {
      Rat u(p, q);
      CHECK_MESSAGE(member(cantor(0, 1), u) == cantor_oracle(u), u.str());
      CHECK(member(cantor(2, 5), R(2) + 3 * u) == cantor_oracle(u));
    }
}

TEST_CASE("cantor ceil and floor") {
  CHECK(*cantor_ceil(0, 1, R(1, 2)) == R(2, 3));
  CHECK(*cantor_floor(0, 1, R(1, 2)) == R(1, 3));
  CHECK(*cantor_ceil(0, 1, R(1, 4)) == R(1, 4));
  CHECK(*cantor_ceil(0, 1, R(4, 27) + R(1, 100)) == R(6, 27));
  CHECK_FALSE(cantor_ceil(0, 1, R(2)).has_value());
}

TEST_CASE("enumeration examples") {
  auto a = enumerate(point(3), 5);
  CHECK(a.points == std::vector<Rat>{R(3)});
  auto b = enumerate(ladder(1, 1, R(1, 2), true), 3);
  CHECK(b.points == std::vector<Rat>{R(0), R(1, 2), R(3, 4), R(1)});
  CHECK(b.tolerance == R(1, 8));
  auto k1 = enumerate(affine(1, 5, ladder(1, 1, R(1, 2), true)), 4);
  CHECK(k1.points.size() == 5);
  CHECK(k1.points.back() == R(6));
  auto c = enumerate(cantor(0, 1), 3);
  CHECK(c.points.size() == 16);
}

TEST_CASE("enumeration is sound, bounded and refines") {
  std::vector<Term> corpus = {
      ladder(1, 1, R(1, 2), true),
      fwrap(ladder(1, 1, R(1, 2), true), true),
      fwrap(fwrap(ladder(1, 1, R(1, 2), true), true), true),
      cantor(0, 1),
      thicken(ladder(1, 1, R(1, 2), true), R(1, 4)),
      mirror(2, thicken(fwrap(ladder(1, 1, R(1, 2), true), true), 1)),
      cantor_orbit(0, 1, point(R(1, 2))),
      union_of({point(-1), cantor(3, 4), interval(5, 6, true)}),
  };
  for (auto& t : corpus) {
    auto h = *hull(t);
    Rat prev_tol;
    for (int d = 1; d <= 5; ++d) {
      auto a = enumerate(t, d);
      for (auto& p : a.points) {
        CHECK(member(t, p));
        CHECK(h.lo <= p);
        CHECK(p <= h.hi);
      }
      for (auto& i : a.intervals) CHECK(member(t, (i.lo + i.hi) / 2));
      if (d > 1) CHECK(a.tolerance <= prev_tol);
      prev_tol = a.tolerance;
    }
  }
}

TEST_CASE("meets examples") {
  CHECK(meets(interval(0, 1), interval(1, 2)));
  CHECK_FALSE(meets(ladder(1, 1, R(1, 2), false), point(1)));
  CHECK(meets(ladder(1, 1, R(1, 2), true), point(1)));
  Term k2 = affine(1, 10, fwrap(ladder(1, 1, R(1, 2), true), true));
  CHECK(meets(k2, affine(1, 11, cantor(0, 1))));
  CHECK_FALSE(meets(affine(1, 5, ladder(1, 1, R(1, 2), true)), cantor(R(61, 10), 7)));
  CHECK(common_points(interval(R(1, 3), R(2, 3)), cantor(0, 1)).points ==
        std::vector<Rat>{R(1, 3), R(2, 3)});
  CHECK(common_points(interval(R(1, 4), R(1, 2)), cantor(0, 1)).infinite);
  CHECK(common_points(interval(R(1, 3), R(2, 3), true), cantor(0, 1)).empty());
  CHECK(common_points(cantor(0, 1), cantor(R(2, 9), R(1, 3))).infinite);
  CHECK_THROWS_AS(common_points(cantor(0, 1), cantor(R(1, 10), R(1, 5))), Error);
  CHECK(common_points(ladder(1, 1, R(1, 2), true), interval(R(1, 2), 2)).infinite);
  CHECK(common_points(cantor_orbit(0, 1, point(R(1, 2))), cantor(0, 1)).empty());
  CHECK(common_points(cantor_orbit(0, 1, point(R(1, 2))), interval(R(1, 8), R(1, 5))).points ==
        std::vector<Rat>{R(1, 6)});
}

TEST_CASE("lowering and canonical forms") {
  Term lad = ladder(1, 1, R(1, 2), true);
  CHECK(canonical(lad) == lad);
  Term fw = fwrap(lad, true);
  CHECK(canonical(fw) == fw);
  Term k3 = affine(1, 15, fwrap(fw, true));
  CHECK(canonical(canonical(k3)) == canonical(k3));
  CHECK(canonical(union_of({interval(0, 1), interval(1, 2), point(R(3, 2))})) == interval(0, 2));
  CHECK(canonical(union_of({point(1), ladder(1, 1, R(1, 2), false)})) == lad);
  CHECK_THROWS_AS(lower(fwrap(interval(0, 2), true)), Error);
  CHECK_THROWS_AS(lower(thicken(cantor(0, 1), 1)), Error);
}

TEST_CASE("thickening follows the half-gap rule") {
  Term th = thicken(ladder(1, 1, R(1, 2), true), R(1, 4));
  // eps(0) = min(1/4, 1/4), eps(1/2) = 1/8, eps(1) = 1/4
  CHECK(member(th, R(1, 4)));
  CHECK_FALSE(member(th, R(1, 4) + R(1, 100)));
  CHECK(member(th, R(5, 8)));
  CHECK_FALSE(member(th, R(5, 8) + R(1, 100)));
  CHECK(member(th, R(5, 4)));
  CHECK_FALSE(member(th, R(5, 4) + R(1, 100)));
  Term b = endpoints(th);
  auto a = enumerate(b, 5);
  // Five enumerated ladder points plus the target, two endpoints each.
  CHECK(a.points.size() == 12);
}

TEST_CASE("thickening an fwrap keeps components separated") {
  Term k2 = fwrap(ladder(1, 1, R(1, 2), true), true);
  Term th = thicken(k2, 1);
  // Point m of window k is 1 - 2^(1-k) + 2^-k (1 - 2^-m); its successor is point m + 1.
  for (long k = 1; k <= 4; ++k)
    for (long m = 0; m <= 6; ++m) {
      auto at = [&](long mm) {
        return Rat(1) - pow(R(1, 2), k - 1) + pow(R(1, 2), k) * (Rat(1) - pow(R(1, 2), mm));
      };
      Rat a = at(m), e = min(Rat(1), (at(m + 1) - a) / 2);
      CHECK(member(th, a + e));
      CHECK_FALSE(member(th, a + e + (at(m + 1) - a - e) / 2));
    }
  CHECK_NOTHROW(lower(endpoints(th)));
}
