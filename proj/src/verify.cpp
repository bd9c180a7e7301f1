#include "scatterlab/verify.hpp"

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/linear.hpp"
#include "scatterlab/ordertype.hpp"
#include "scatterlab/semantics.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace scatterlab {

std::vector<Rat> probe_points(const Term& t, int probe_depth) {
  auto a = enumerate(t, probe_depth);
  std::vector<Rat> xs = a.points;
  for (auto& i : a.intervals) {
    xs.push_back(i.lo);
    xs.push_back(i.hi);
    xs.push_back((i.lo + i.hi) / 2);
  }
  for (auto& w : a.windows) {
    xs.push_back(w.lo);
    xs.push_back(w.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Probe> numeric_limit_points(const Term& t, int depth, int probe_depth) {
  auto a = enumerate(t, depth);
  std::vector<Probe> out;
  for (auto& x : probe_points(t, probe_depth)) {
    bool hit = false;
    // Nearest listed neighbours on either side of x.
    auto it = std::lower_bound(a.points.begin(), a.points.end(), x);
    auto above = it;
    if (above != a.points.end() && *above == x) ++above;
    if (above != a.points.end() && *above - x <= a.tolerance) hit = true;
    if (it != a.points.begin() && x - *std::prev(it) <= a.tolerance) hit = true;
    // Intervals and unlisted windows hold infinitely many points.
    auto near = [&](const Rat& lo, const Rat& hi) {
      Rat d = x < lo ? lo - x : (x > hi ? x - hi : Rat(0));
      return d <= a.tolerance;
    };
    for (auto& i : a.intervals) hit = hit || near(i.lo, i.hi);
    for (auto& w : a.windows) hit = hit || near(w.lo, w.hi);
    out.push_back({x, hit});
  }
  return out;
}

std::set<long> lemma1(const std::vector<long>& g) {
  std::set<long> seen, out;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 1) fail(ErrorKind::non_injective, "values must be positive integers");
    if (!seen.insert(g[i]).second) fail(ErrorKind::non_injective, "value " + std::to_string(g[i]) + " repeats");
    long n = static_cast<long>(i) + 1;
    if (n <= g[i]) out.insert(n);
  }
  return out;
}

CoverVerdict lemma2(const Rat& a, const Rat& b, const std::vector<ClosedInterval>& family) {
  if (family.size() == 1 && family[0].lo == a && family[0].hi == b) return {true, "", std::nullopt};
  for (auto& i : family) {
    if (i.lo >= i.hi) return {false, "degenerate", i.lo};
    if (i.lo < a) return {false, "outside", i.lo};
    if (i.hi > b) return {false, "outside", i.hi};
  }
  auto sorted = family;
  std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.lo < y.lo; });
  if (sorted.empty() || sorted.front().lo > a) return {false, "gap", a};
  // Two closed nondegenerate pieces either share a point or leave a gap.
  if (sorted.size() == 1) return {false, "gap", b};
  Rat reach = sorted[0].hi, next = sorted[1].lo;
  if (next <= reach) return {false, "overlap", next};
  return {false, "gap", (reach + next) / 2};
}

int prop1_index(const Rat& v, const Rat& w, const Rat& delta) {
  if (!(v >= 2 && w > v)) fail(ErrorKind::range, "prop1_index needs 2 <= v < w");
  if (!(delta > 0 && delta <= 1)) fail(ErrorKind::range, "delta must lie in (0, 1]");
  Rat vn = 1, wn = 1;
  for (int n = 1;; ++n) {
    vn *= v;
    wn *= w;
    if (wn - 1 > vn / delta) return n;
  }
}

std::vector<int> cluster_profile(const Term& t, const Rat& delta) {
  if (!(delta > 0 && delta < 1)) fail(ErrorKind::range, "delta must lie in (0, 1)");
  auto a = enumerate(t, 1);
  if (!a.intervals.empty() || !a.windows.empty()) fail(ErrorKind::not_supported, "cluster_profile needs a finite point set");
  std::vector<int> sizes;
  auto& pts = a.points;
  for (size_t k = 0; k < pts.size();) {
    size_t e = k + 1;
    while (e < pts.size() && pts[e] - pts[e - 1] < delta) ++e;
    // The window of a group p^n + 1/(k p^n) is read off its integer part.
    Rat base = from_integer(floor(pts[k]));
    if (base > 0 && Rat(1) / base < delta) sizes.push_back(static_cast<int>(e - k));
    k = e;
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names{"signature",      "recover_S_linear", "recover_S_cubes",
                                              "chain_sizes",    "bits_profile",     "cluster_profile",
                                              "holes",          "cb_profile",       "order_type"};
  return names;
}

namespace {

const Term& need_term(const Built& v, const std::string& name) {
  if (auto t = std::get_if<Term>(&v)) return *t;
  fail(ErrorKind::not_supported, name + " needs a point-set term");
}

Json int_set(const std::set<int>& s) { return Json(std::vector<int>(s.begin(), s.end())); }

}  // namespace

Json compute_invariant(const Built& v, const std::string& name, const InvariantOptions& o) {
  if (name == "signature") return int_set(signature(need_term(v, name), o.k_max));
  if (name == "recover_S_linear") return int_set(recover_S_linear(need_term(v, name), o.k_max));
  if (name == "recover_S_cubes") {
    auto f = std::get_if<CubeFamily>(&v);
    if (!f) fail(ErrorKind::not_supported, "recover_S_cubes needs a cube family");
    return int_set(recover_S_cubes(*f, o.k_max));
  }
  if (name == "chain_sizes") {
    auto u = std::get_if<BoxUnion>(&v);
    if (!u) fail(ErrorKind::not_supported, "chain_sizes needs a box union");
    std::vector<std::pair<long, long>> rows;
    for (auto& c : chain_sizes(*u))
      if (c.size > 1) rows.emplace_back(c.size, c.max_chain);
    std::sort(rows.begin(), rows.end());
    Json j = Json::array();
    for (auto& [s, m] : rows) j.push_back({{"max_chain", m}, {"size", s}});
    return j;
  }
  if (name == "bits_profile") {
    if (!o.bits_count) fail(ErrorKind::usage, "bits_profile needs a bit count");
    return Json(bits_profile(need_term(v, name), *o.bits_count));
  }
  if (name == "cluster_profile") return Json(cluster_profile(need_term(v, name), o.delta));
  if (name == "holes") {
    std::vector<int> holes;
    if (auto f = std::get_if<Frames>(&v)) {
      for (auto& r : f->frames) holes.push_back(frame_holes(r));
    } else {
      fail(ErrorKind::not_supported, "holes needs frames");
    }
    std::sort(holes.begin(), holes.end());
    if (holes.size() == 1) return holes.front();
    return Json(holes);
  }
  if (name == "cb_profile") return to_json(cb_profile(need_term(v, name), o.k_max));
  if (name == "order_type") return scattered_order_type(need_term(v, name)).str();
  fail(ErrorKind::usage, "unknown invariant " + name);
}

bool DistinguishReport::all_distinct() const {
  for (size_t i = 0; i < verdicts.size(); ++i)
    for (size_t j = 0; j < verdicts.size(); ++j)
      if (i != j && verdicts[i][j] != "distinct") return false;
  return true;
}

Json to_json(const DistinguishReport& r) {
  Json witnesses = Json::array();
  for (size_t i = 0; i < r.verdicts.size(); ++i)
    for (size_t j = i + 1; j < r.verdicts.size(); ++j)
      if (r.verdicts[i][j] == "distinct")
        witnesses.push_back({{"pair", {i, j}}, {"left", r.values[i]}, {"right", r.values[j]}});
  return {{"family", std::string(family_name(r.family))},
          {"invariant", r.invariant},
          {"labels", r.labels},
          {"values", r.values},
          {"verdicts", r.verdicts},
          {"witnesses", witnesses},
          {"all_distinct", r.all_distinct()}};
}

DistinguishReport distinguish_matrix(FamilyId family, const std::vector<FamilySpec>& members,
                                     const std::string& invariant, const InvariantOptions& options) {
  if (std::find(invariant_names().begin(), invariant_names().end(), invariant) == invariant_names().end())
    fail(ErrorKind::usage, "unknown invariant " + invariant);
  DistinguishReport r;
  r.family = family;
  r.invariant = invariant;
  std::vector<std::future<Json>> cells;
  for (auto& m : members) {
    if (m.id != family) fail(ErrorKind::usage, "member family differs from the report family");
    r.labels.push_back(m.label);
    cells.push_back(std::async(std::launch::async, [&m, &invariant, options]() -> Json {
      auto o = options;
      if (!o.bits_count && !m.bits.empty()) o.bits_count = static_cast<int>(m.bits.size());
      try {
        return compute_invariant(build(m), invariant, o);
      } catch (const Error&) {
        return nullptr;
      }
    }));
  }
  for (auto& c : cells) r.values.push_back(c.get());
  size_t n = members.size();
  r.verdicts.assign(n, std::vector<std::string>(n, "unknown"));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        r.verdicts[i][j] = "equal";
      } else if (!r.values[i].is_null() && !r.values[j].is_null()) {
        r.verdicts[i][j] = r.values[i] == r.values[j] ? "equal" : "distinct";
      }
    }
  return r;
}

}  // namespace scatterlab
