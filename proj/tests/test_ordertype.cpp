#include <doctest.h>

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/families.hpp"
#include "scatterlab/ordertype.hpp"
#include "scatterlab/semantics.hpp"

#include <random>

using namespace scatterlab;

namespace {

OrdCNF w(int e, long c = 1) { return OrdCNF::omega_power(e, c); }

OrdCNF random_ord(std::mt19937& rng) {
  OrdCNF o;
  for (int e = 3; e >= 0; --e)
    if (rng() % 2) o.terms.emplace_back(e, 1 + static_cast<long>(rng() % 3));
  return o;
}

}  // namespace

TEST_CASE("cnf arithmetic") {
  CHECK(add(w(2), w(1)).str() == "w^2+w");
  CHECK(add(w(1), w(2)) == w(2));
  CHECK(mul_omega(add(w(3), OrdCNF::finite(1))) == w(4));
  CHECK(cmp(add(w(2), OrdCNF::finite(1)), w(2)) == std::strong_ordering::greater);
  CHECK(add(add(w(3), w(1, 2)), OrdCNF::finite(5)).str() == "w^3+w·2+5");
  CHECK(OrdCNF{}.str() == "0");
}

TEST_CASE("cnf laws on random samples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_ord(rng), b = random_ord(rng), c = random_ord(rng);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    auto ab = cmp(a, b), ba = cmp(b, a);
    CHECK((ab == 0) == (ba == 0));
    CHECK((ab < 0) == (ba > 0));
    CHECK((ab == 0) == (a == b));
    if (ab <= 0 && cmp(b, c) <= 0) CHECK(cmp(a, c) <= 0);
    // a + b >= b, with equality exactly when a is absorbed.
    CHECK(cmp(add(a, b), b) >= 0);
  }
}

TEST_CASE("order types of scattered terms") {
  for (int n = 1; n <= 4; ++n) CHECK(scattered_order_type(build_Kn(n)) == add(w(n), OrdCNF::finite(1)));
  CHECK(scattered_order_type(build_Kn(3)).str() == "w^3+1");
  CHECK(scattered_order_type(point(0)).str() == "1");
  CHECK_THROWS_AS(scattered_order_type(ladder(0, -1, Rat(1, 2), true)), Error);
  CHECK_THROWS_AS(scattered_order_type(cantor(0, 1)), Error);
  CHECK_THROWS_AS(scattered_order_type(interval(0, 1)), Error);
}

TEST_CASE("ordered sum against a prefix count") {
  Term t = union_of({affine(1, -5, build_Kn(1)), point(3)});
  CHECK(scattered_order_type(t).str() == "w+2");
  // Oracle: one limit point, and the enumeration shows exactly two points
  // at or above it (the limit and the later point).
  Term d = derive(t);
  auto lim = enumerate(d, 8).points;
  REQUIRE(lim.size() == 1);
  REQUIRE(derive(d).is_empty());
  auto pts = enumerate(t, 8).points;
  long above = std::count_if(pts.begin(), pts.end(), [&](const Rat& x) { return x >= lim[0]; });
  CHECK(above == 2);
}

TEST_CASE("K_n prefixes embed in w^n+1") {
  // The enumeration of K_n at depth d is a finite well-ordered set whose
  // rank-n points occur only at the top, as in w^n+1.
  for (int n = 1; n <= 4; ++n) {
    auto pts = enumerate(build_Kn(n), 4).points;
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.back() == Rat(5 * n + 1));
    Term top = build_Kn(n);
    for (int k = 0; k < n; ++k) top = derive(top);
    CHECK(top == point(5 * n + 1));
  }
}

TEST_CASE("zeta fragment") {
  auto a = ug_order_type({0});
  REQUIRE(a.tag == LinType::Tag::omega_seq);
  REQUIRE(a.items.size() == 3);
  CHECK(a.items[0] == LinType::fin(1));
  CHECK(a.items[1] == LinType::zeta());
  CHECK(a.items[2] == LinType::fin(2));
  CHECK(a.str() == "1+z+2+…");
  CHECK(lin_equal(ug_order_type({1}), ug_order_type({0})) == false);
  auto b = ug_order_type({1, 0});
  CHECK(b.items[2].k == 3);
  CHECK(b.items[4].k == 2);
  CHECK_FALSE(lin_equal(a, b).has_value());
  CHECK(LinType::sum({LinType::fin(1), LinType::sum({LinType::fin(2), LinType::zeta()}), LinType::fin(0)}).canonical() ==
        LinType::sum({LinType::fin(3), LinType::zeta()}));
}

TEST_CASE("zeta fragment is injective on 12-bit lists") {
  std::set<std::string> seen;
  for (int v = 0; v < 4096; ++v) {
    std::vector<int> bits;
    for (int i = 0; i < 12; ++i) bits.push_back((v >> i) & 1);
    seen.insert(ug_order_type(bits).canonical().str());
  }
  CHECK(seen.size() == 4096);
}
