#include <doctest.h>

#include "scatterlab/error.hpp"
#include "scatterlab/families.hpp"

#include <algorithm>
#include <random>

using namespace scatterlab;

namespace {
Rat R(long p, long q = 1) { return Rat(p, q); }
Box sq(long x, long y, long e = 1) { return Box{{R(x), R(y)}, R(e), true}; }

// Distance-zero oracle: the closures meet iff the gap along every axis is nonpositive.
bool touch_oracle(const Box& a, const Box& b) {
  Rat gap = 0;
  for (size_t i = 0; i < a.corner.size(); ++i) {
    Rat d = max(a.corner[i] - (b.corner[i] + b.edge), b.corner[i] - (a.corner[i] + a.edge));
    gap = max(gap, d);
  }
  return gap <= 0;
}
}  // namespace

TEST_CASE("adjacency") {
  CHECK(box_components(BoxUnion{2, {sq(0, 0), sq(1, 0)}}).size() == 1);
  CHECK(box_components(BoxUnion{2, {sq(0, 0), sq(1, 1)}}).size() == 1);
  CHECK(box_components(BoxUnion{2, {sq(0, 0), sq(2, 0)}}).size() == 2);
  CHECK_THROWS_AS(box_components(BoxUnion{2, {sq(0, 0), Box{{R(0)}, R(1), true}}}), Error);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> pos(-8, 8), edge(1, 4);
  for (int i = 0; i < 1000; ++i) {
    Box a{{R(pos(rng), 2), R(pos(rng), 2)}, R(edge(rng), 2), true};
    Box b{{R(pos(rng), 2), R(pos(rng), 2)}, R(edge(rng), 2), true};
    CHECK(touches(a, b) == touch_oracle(a, b));
    CHECK(touches(a, b) == touches(b, a));
  }
}

TEST_CASE("chains") {
  auto single = chain_sizes(BoxUnion{2, {sq(0, 0)}});
  CHECK(single[0].max_chain == 1);
  auto row = chain_sizes(BoxUnion{2, {sq(0, 0), sq(1, 0), sq(2, 0)}});
  CHECK(row[0].max_chain == 3);
  // A star: four pairwise separated leaves around a hub; the longest path has three boxes.
  auto star = chain_sizes(BoxUnion{2, {sq(0, 0, 3), sq(-1, 1), sq(3, 1), sq(1, 3), sq(1, -1)}});
  CHECK(star[0].size == 5);
  CHECK(star[0].max_chain == 3);
  auto grid = build_YS_prop3({2}, 2);
  bool found = false;
  for (auto& c : chain_sizes(grid))
    if (c.size > 1) {
      found = true;
      CHECK(c.size == 9);
      CHECK(c.max_chain == 9);
      for (size_t i = 0; i + 1 < c.witness.size(); ++i)
        CHECK(touches(grid.boxes[c.witness[i]], grid.boxes[c.witness[i + 1]]));
      auto w = c.witness;
      std::sort(w.begin(), w.end());
      CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
    }
  CHECK(found);
}

TEST_CASE("frame holes") {
  CHECK(frame_holes(build_frame(4, false)) == 4);
  CHECK(frame_holes(FrameRegion{Box{{R(0), R(0)}, R(1), false}, {}}) == 0);
  CHECK(frame_subcube_count(build_frame(1, false), 1) == 8);
  FrameRegion bad{Box{{R(0), R(0)}, R(1), false}, {Box{{R(0), R(0)}, R(1, 2), true}}};
  CHECK_THROWS_AS(frame_holes(bad), Error);
}

TEST_CASE("cube recovery") {
  CHECK(recover_S_cubes(lift_cubes(build_XS({1, 3}), 2, 3), 6) == std::set<int>{1, 3});
  CHECK(recover_S_cubes(lift_cubes(build_XS({2}), 3, 3), 6) == std::set<int>{2});
  CubeFamily one{2, interval(0, 1), {{Box{{R(0), R(0)}, R(1), false}, R(0), R(1)}}};
  CHECK(recover_S_cubes(one, 3).empty());
  one.members[0].box.edge = R(2);
  CHECK_THROWS_AS(recover_S_cubes(one, 3), Error);
}
