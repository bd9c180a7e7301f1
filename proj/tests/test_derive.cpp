#include <doctest.h>

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/families.hpp"

using namespace scatterlab;

namespace {
Rat R(long p, long q = 1) { return Rat(p, q); }
}  // namespace

TEST_CASE("derivative examples") {
  CHECK(derive(point(0)).is_empty());
  CHECK(derive(derive(build_Kn(2))) == point(11));
  CHECK(derive(cantor(0, 1)) == cantor(0, 1));
  CHECK(derive(ladder(1, 1, R(1, 2), false)) == point(1));
  CHECK(derive(interval(0, 1, true)) == interval(0, 1));
  CHECK(derive(fwrap(ladder(1, 1, R(1, 2), true), true)) == ladder(1, R(1, 2), R(1, 2), true));
}

TEST_CASE("cb profiles of the K_n towers") {
  for (int n = 1; n <= 6; ++n) {
    auto p = cb_profile(build_Kn(n), 10);
    REQUIRE(p.vanishing_index.has_value());
    CHECK(*p.vanishing_index == n + 1);
    CHECK(p.iterates[n] == point(5 * n + 1));
  }
  auto iv = cb_profile(interval(0, 1), 5);
  CHECK(iv.does_not_vanish);
  CHECK(iv.iterates.size() == 1);
  CHECK(*cb_profile(ladder(1, 1, R(1, 2), true), 5).vanishing_index == 2);
}

TEST_CASE("kernel splits") {
  auto s = kernel_split(union_of({cantor(0, 1), point(2)}));
  CHECK(s.kernel == cantor(0, 1));
  CHECK(s.scattered == point(2));
  auto k4 = kernel_split(build_Kn(4));
  CHECK(k4.kernel.is_empty());
  CHECK(k4.scattered == canonical(build_Kn(4)));
  auto y = kernel_split(build_YS_td({1}));
  // Compressed by 1/10: the Cantor block sits on [6/10, 7/10].
  CHECK(member(y.kernel, R(6, 10)));
  CHECK(member(y.kernel, R(7, 10)));
  CHECK(member(y.kernel, R(6, 10) + R(1, 30)));
  CHECK_FALSE(member(y.kernel, 1));  // the top point is isolated for finite S
  CHECK(member(y.scattered, 1));
  CHECK(derive(y.kernel) == y.kernel);
}

TEST_CASE("signatures") {
  CHECK(signature(build_YS_td({1, 3}), 6) == std::set<int>{1, 3});
  CHECK(signature(build_YS_td({1, 4}), 6) == std::set<int>{1, 4});
  CHECK(signature(cantor(0, 1), 3).empty());
  CHECK(signature(build_Kn(3), 6).empty());
  CHECK_THROWS_AS(signature(build_YS_td({5}), 3), Error);
}

TEST_CASE("closure and derivative of discrete approximants") {
  Term z = discrete_approximant(build_YS_td({2, 5}));
  Term zc = closure(z);
  // The closure adds exactly Y_S; its derivative layers never leave the Cantor blocks.
  CHECK(signature(derive(zc), 8) == std::set<int>{2, 5});
}
