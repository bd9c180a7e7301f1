#include <doctest.h>

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/families.hpp"

using namespace scatterlab;

namespace {
Rat R(long p, long q = 1) { return Rat(p, q); }
}  // namespace

TEST_CASE("K_n blocks") {
  for (int n = 1; n <= 8; ++n) {
    auto h = *hull(build_Kn(n));
    CHECK(h.lo == R(5 * n));
    CHECK(h.hi == R(5 * n + 1));
  }
  CHECK(build_Kn(1) == affine(1, 5, ladder(1, 1, R(1, 2), true)));
  CHECK_THROWS_AS(build_Kn(0), Error);
  CHECK_THROWS_AS(build_Kn(9), Error);
}

TEST_CASE("X_S has no point components") {
  for (auto S : {std::set<int>{1}, std::set<int>{2, 3}, std::set<int>{5}}) {
    auto list = components_upto(build_XS(S), 4);
    for (auto& c : list.components) CHECK(c.lo < c.hi);
  }
  CHECK(recover_S_linear(build_XS({2, 3}), 6) == std::set<int>{2, 3});
  CHECK_THROWS_AS(build_XS({6}), Error);
}

TEST_CASE("frames") {
  auto f = build_frame(2, false);
  CHECK(f.outer.corner == std::vector<Rat>{R(1, 4), R(1, 4)});
  CHECK(f.outer.edge == R(1, 4));
  CHECK(f.holes.size() == 2);
  CHECK(f.holes[0].edge == R(1, 4) / 5);
  auto g = build_frame(2, true);
  for (auto& h : g.holes)
    for (auto& c : h.corner) CHECK(c.is_integer());
  CHECK(g.outer.corner[0] == R(80, 4));
  CHECK_THROWS_AS(build_frames({3}, false), Error);
}

TEST_CASE("grid boxes") {
  auto u = build_YS_prop3({1}, 2);
  CHECK(u.boxes.size() == 1 + 4 + 5);
  auto none = build_YS_prop3({}, 2);
  for (auto& c : chain_sizes(none)) CHECK(c.size == 1);
}

TEST_CASE("U_g windows") {
  Term z1 = build_Zn(1);
  CHECK(member(derive(z1), 7));
  CHECK(member(derive(z1), 8));
  CHECK_FALSE(member(z1, 7));
  Term u = build_Ug({0, 1});
  CHECK(member(u, R(33, 2)));  // ]16, 17[
  CHECK_FALSE(member(u, R(21, 2)));
}

TEST_CASE("discrete approximants") {
  Term two = union_of({point(0), point(1)});
  Term z = discrete_approximant(two);
  CHECK(probe_equal(derive(z), two));
  CHECK_FALSE(member(z, 0));
  CHECK(derive(derive(z)).is_empty());
  Term k = affine(1, -10, build_Kn(2));
  CHECK(probe_equal(derive(discrete_approximant(k)), k));
  Term zc = discrete_approximant(cantor(0, 1));
  CHECK(probe_equal(derive(zc), cantor(0, 1)));
  CHECK_THROWS_AS(discrete_approximant(interval(0, 1)), Error);
}

TEST_CASE("prime groups") {
  Term g = G_group(3, 2);
  auto pts = enumerate(g, 1).points;
  CHECK(pts.size() == 3);
  CHECK(pts.back() - pts.front() < R(1, 9));
  CHECK(enumerate(build_AS({2, 3}, 3), 1).points.size() == 15);
  CHECK_THROWS_AS(build_AS({4}, 3), Error);
}

TEST_CASE("X_u widths and gaps") {
  auto list = components_upto(build_Xu(2, 4), 1);
  REQUIRE(list.components.size() == 4);
  std::vector<Rat> widths;
  for (auto& c : list.components) widths.push_back(c.hi - c.lo);
  CHECK(widths == std::vector<Rat>{R(2), R(4), R(8), R(16)});
  for (size_t i = 0; i + 1 < 4; ++i) CHECK(list.components[i + 1].lo - list.components[i].hi == 1);
  CHECK(components_upto(build_Xu(3, 5, true), 1).components.size() == 5);
}

TEST_CASE("representative points") {
  Term d = representative_points(build_Ug({1, 0}));
  CHECK(member(d, R(6) + R(9, 2)));  // midpoint of ]10, 11[
  CHECK(bits_profile(d, 2) == std::vector<int>{1, 0});
  Term base = representative_points(build_Ug({}));
  CHECK(member(base, R(13, 2)));
}
