#include <doctest.h>

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/semantics.hpp"
#include "scatterlab/verify.hpp"

#include <random>

using namespace scatterlab;

namespace {

Rat R(long p, long q = 1) { return Rat(p, q); }

bool detected_at(const Term& t, int depth, const Rat& x, int probe_depth = kProbeDepth) {
  for (auto& p : numeric_limit_points(t, depth, probe_depth))
    if (p.x == x) return p.detected;
  FAIL("probe missing");
  return false;
}

// w^n - 1 > v^n / delta, evaluated independently.
bool prop1_holds(const Rat& v, const Rat& w, const Rat& delta, int n) {
  return pow(w, n) - 1 > pow(v, n) / delta;
}

}  // namespace

TEST_CASE("numeric limit points") {
  Term lad = ladder(1, 1, R(1, 2), true);
  for (int d = 3; d <= 8; ++d) CHECK(detected_at(lad, d, R(1)));
  CHECK_FALSE(detected_at(lad, 8, R(0)));

  Term k2 = build_Kn(2);
  CHECK(detected_at(k2, 8, R(11)));
  CHECK_FALSE(detected_at(k2, 8, enumerate(k2, 4).points.front()));

  Term c = cantor(0, 1);
  for (auto& x : enumerate(c, 3).points) CHECK(detected_at(c, 6, x, 3));
}

TEST_CASE("detection settles on member(derive)") {
  std::vector<Term> corpus{ladder(1, 1, R(1, 2), true), build_Kn(1), build_Kn(2), build_Kn(3), cantor(0, 1),
                           thicken(build_Kn(1), 1), union_of({interval(0, 1), point(2), ladder(4, 1, R(1, 3), true)})};
  for (auto& t : corpus) {
    Term d = derive(t);
    auto at8 = numeric_limit_points(t, 8);
    for (auto& p : at8) CHECK_MESSAGE(p.detected == member(d, p.x), p.x.str());
  }
}

TEST_CASE("pigeonhole form of the injection bound") {
  CHECK(lemma1({2, 3, 4, 5, 6}) == std::set<long>{1, 2, 3, 4, 5});
  CHECK(lemma1({5, 4, 3, 2, 1}) == std::set<long>{1, 2, 3});
  CHECK_THROWS_AS(lemma1({1, 1}), Error);
  CHECK_THROWS_AS(lemma1({0, 2}), Error);
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::vector<long> pool(50);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    size_t m = 1 + rng() % 50;
    std::vector<long> g(pool.begin(), pool.begin() + static_cast<long>(m));
    auto s = lemma1(g);
    REQUIRE_FALSE(s.empty());
    for (long n : s) CHECK(n <= g[static_cast<size_t>(n - 1)]);
  }
}

TEST_CASE("interval cover refuter") {
  CHECK(lemma2(0, 1, {{0, 1}}).accepted);
  auto v = lemma2(0, 1, {{0, R(1, 2)}, {R(1, 2), 1}});
  CHECK_FALSE(v.accepted);
  CHECK(v.witness == "overlap");
  CHECK(*v.at == R(1, 2));
  v = lemma2(0, 1, {{R(1, 2), 1}, {0, R(1, 3)}});
  CHECK(v.witness == "gap");
  CHECK(*v.at > R(1, 3));
  CHECK(*v.at < R(1, 2));
  CHECK(lemma2(0, 1, {{0, 0}, {0, 1}}).witness == "degenerate");
  CHECK(lemma2(0, 1, {}).witness == "gap");
  CHECK(lemma2(0, 1, {{0, R(1, 2)}}).witness == "gap");
}

TEST_CASE("width index") {
  CHECK(prop1_index(2, 3, R(1, 10)) == 6);
  CHECK(prop1_holds(2, 3, R(1, 10), 6));
  CHECK_FALSE(prop1_holds(2, 3, R(1, 10), 5));
  CHECK(prop1_index(2, 3, 1) <= prop1_index(2, 3, R(1, 10)));
  CHECK(prop1_index(2, 4, R(1, 2)) == 2);
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Rat v(2 + static_cast<long>(rng() % 20), 8);
    v = max(v, Rat(2));
    Rat w = v + Rat(1 + static_cast<long>(rng() % 16), 8);
    w = min(w, Rat(5));
    if (w <= v) continue;
    Rat delta(1 + static_cast<long>(rng() % 99), 100);
    int n = prop1_index(v, w, delta);
    CHECK(prop1_holds(v, w, delta, n));
    if (n > 1) CHECK_FALSE(prop1_holds(v, w, delta, n - 1));
  }
}

TEST_CASE("cluster profiles") {
  auto p = cluster_profile(build_AS({3}, 4), R(1, 10));
  CHECK(p == std::vector<int>{3, 3});  // windows n = 3, 4
  CHECK(cluster_profile(build_AS({3}, 1), R(1, 4)).empty());
  CHECK_THROWS_AS(cluster_profile(build_AS({3}, 2), 1), Error);
  std::set<std::set<int>> seen;
  for (int mask = 1; mask < 8; ++mask) {
    std::set<int> S;
    int primes[] = {2, 3, 5};
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) S.insert(primes[i]);
    auto prof = cluster_profile(build_AS(S, 8), R(1, 10));
    seen.insert(std::set<int>(prof.begin(), prof.end()));
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("distinguish matrix") {
  std::vector<FamilySpec> members;
  for (auto S : std::vector<std::set<int>>{{1}, {2}, {1, 2}, {1}}) {
    FamilySpec f;
    f.id = FamilyId::xs;
    f.S = S;
    members.push_back(f);
  }
  auto r = distinguish_matrix(FamilyId::xs, members, "recover_S_linear", {});
  CHECK(r.verdicts[0][1] == "distinct");
  CHECK(r.verdicts[0][3] == "equal");
  CHECK(r.verdicts[1][1] == "equal");
  CHECK_FALSE(r.all_distinct());
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(r.verdicts[i][j] == r.verdicts[j][i]);
  auto j = to_json(r);
  for (auto& w : j["witnesses"]) CHECK(w["left"] != w["right"]);
  CHECK_THROWS_AS(distinguish_matrix(FamilyId::xs, members, "nope", {}), Error);
  // Errors become unknown verdicts.
  auto u = distinguish_matrix(FamilyId::xs, members, "chain_sizes", {});
  CHECK(u.verdicts[0][1] == "unknown");
}
