#include <doctest.h>

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/families.hpp"

using namespace scatterlab;

namespace {
Rat R(long p, long q = 1) { return Rat(p, q); }
}  // namespace

TEST_CASE("boundary examples") {
  CHECK(boundary(interval(0, 1)) == union_of({point(0), point(1)}));
  CHECK_THROWS_AS(boundary(point(0)), Error);
  CHECK_THROWS_AS(boundary(cantor(0, 1)), Error);
  Term xs = build_XS({2});
  // Derivative of the boundary sits on the K-scaffold's derivative (compressed by 1/15).
  Term kd = derive(affine(R(1, 15), 0, mirror(12, build_Kn(2))));
  CHECK(derive(boundary(xs)) == canonical(kd));
}

TEST_CASE("component listings") {
  auto two = components_upto(union_of({interval(0, 1), interval(2, 3)}), 1);
  CHECK(two.components.size() == 2);
  CHECK_FALSE(two.complete_below.has_value());
  auto x1 = components_upto(build_XS({1}), 6);
  bool glued = false;
  for (auto& c : x1.components) glued = glued || (c.lo == R(6, 10) && c.hi == R(8, 10));
  CHECK(glued);
  for (size_t i = 0; i + 1 < x1.components.size(); ++i) CHECK(x1.components[i].hi < x1.components[i + 1].lo);
  for (auto& c : x1.components) CHECK(c.shape == Component::Shape::interval);
  CHECK_THROWS_AS(components_upto(cantor(0, 1), 2), Error);
}

TEST_CASE("components are stable under deeper listing") {
  Term x = build_XS({2, 3});
  auto a = components_upto(x, 3), b = components_upto(x, 4);
  for (auto& c : a.components)
    if (!a.complete_below || c.hi < *a.complete_below)
      CHECK(std::find(b.components.begin(), b.components.end(), c) != b.components.end());
}

TEST_CASE("linear recovery") {
  CHECK(recover_S_linear(build_XS({2, 4}), 6) == std::set<int>{2, 4});
  CHECK(recover_S_linear(build_XS({1}), 3) == std::set<int>{1});
  CHECK(recover_S_linear(thicken(build_Kn(2), 1), 5).empty());
  for (int mask = 1; mask < 32; ++mask) {
    std::set<int> S;
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1) S.insert(i + 1);
    CHECK(recover_S_linear(build_XS(S), 7) == S);
  }
}

TEST_CASE("bit profiles") {
  CHECK(bits_profile(build_Ug({1, 1, 0}), 3) == std::vector<int>{1, 1, 0});
  CHECK(bits_profile(closure(build_Ug({0, 1, 1})), 3) == std::vector<int>{0, 1, 1});
  CHECK(bits_profile(build_Ug({0, 0, 0}), 3) == std::vector<int>{0, 0, 0});
  // Isolated components between blocks one and two for g = 101: ]8,9[, ]10,11[, ]12,13[.
  auto list = components_upto(build_Ug({1, 0, 1}), 2);
  int between = 0;
  for (auto& c : list.components) between += (c.lo >= 8 && c.hi <= 13) ? 1 : 0;
  CHECK(between == 3);
  CHECK_THROWS_AS(bits_profile(build_XS({1}), 1), Error);
}
