#include "scatterlab/linear.hpp"

#include "scatterlab/derive.hpp"
#include "scatterlab/error.hpp"

#include <algorithm>

namespace scatterlab {

using namespace terms;

Term boundary(const Term& t) { return raise(endpoint_set(lower(t))); }

namespace {

struct Listing {
  std::vector<Component> comps;
  std::vector<Window> windows;
};

void list_core(const Term& t, int depth, Listing& out) {
  switch (t.kind()) {
    case Kind::empty: return;
    case Kind::point: {
      const Rat& p = t.as<Point>().at;
      out.comps.push_back({Component::Shape::point, p, p, false, std::nullopt});
      return;
    }
    case Kind::interval: {
      auto& i = t.as<Interval>();
      out.comps.push_back({Component::Shape::interval, i.lo, i.hi, i.open, std::nullopt});
      return;
    }
    case Kind::union_:
      for (auto& p : t.as<Union>().parts) list_core(p, depth, out);
      return;
    case Kind::geo: {
      auto& g = t.as<Geo>();
      Listing seed;
      list_core(g.seed, depth, seed);
      for (int j = 0; j < depth; ++j) {
        Rat s = pow(g.ratio, j), b = g.center * (Rat(1) - s);
        for (auto c : seed.comps) {
          c.lo = s * c.lo + b;
          c.hi = s * c.hi + b;
          out.comps.push_back(c);
        }
        for (auto w : seed.windows) out.windows.push_back({s * w.lo + b, s * w.hi + b, s * w.limit + b});
      }
      if (g.include_center) out.comps.push_back({Component::Shape::point, g.center, g.center, false, std::nullopt});
      auto h = *hull(g.seed);
      Rat s = pow(g.ratio, depth), b = g.center * (Rat(1) - s);
      Rat a = s * h.lo + b, z = s * h.hi + b;
      out.windows.push_back({min(a, g.center), max(z, g.center), g.center});
      return;
    }
    case Kind::cantor:
    case Kind::cantor_orbit:
      fail(ErrorKind::not_supported, "components of Cantor parts are singletons; use the kernel machinery");
    default: list_core(lower(t), depth, out);
  }
}

bool closed_touch(const Component& a, const Component& b) {
  return !a.open && !b.open && b.lo <= a.hi;
}

}  // namespace

ComponentList components_upto(const Term& t, int depth) {
  if (depth < 1) fail(ErrorKind::range, "depth must be positive");
  Listing raw;
  list_core(lower(t), depth, raw);
  std::sort(raw.comps.begin(), raw.comps.end(), [](const Component& a, const Component& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  ComponentList out;
  out.depth = depth;
  for (auto& c : raw.comps) {
    if (!out.components.empty() && closed_touch(out.components.back(), c)) {
      auto& last = out.components.back();
      last.hi = max(last.hi, c.hi);
      if (last.hi > last.lo) last.shape = Component::Shape::interval;
      continue;
    }
    out.components.push_back(c);
  }
  std::sort(raw.windows.begin(), raw.windows.end(),
            [](const Window& a, const Window& b) { return a.lo < b.lo; });
  out.windows = std::move(raw.windows);
  for (auto& w : out.windows)
    if (!out.complete_below || w.lo < *out.complete_below) out.complete_below = w.lo;
  return out;
}

BoundaryTower::BoundaryTower(const Term& t) { iter_.push_back(endpoint_set(lower(t))); }

const Term& BoundaryTower::at(int m) {
  while (static_cast<int>(iter_.size()) <= m) iter_.push_back(derive_lowered(iter_.back()));
  return iter_[m];
}

int BoundaryTower::hits(int m, const Rat& lo, const Rat& hi) {
  return static_cast<int>(member(at(m), lo)) + static_cast<int>(member(at(m), hi));
}

std::optional<int> BoundaryTower::recovery_index(const Rat& lo, const Rat& hi, int k_max) {
  if (hits(1, lo, hi) != 2) return std::nullopt;
  int m = 1;
  while (hits(m + 1, lo, hi) > 0)
    if (++m > k_max) fail(ErrorKind::horizon_exceeded, "derivatives of the boundary do not leave the component");
  return m;
}

std::set<int> recover_S_linear(const Term& t, int k_max) {
  if (k_max < 1) fail(ErrorKind::range, "k_max must be positive");
  Term x = lower(t);
  BoundaryTower tower(x);
  std::set<int> s;
  // Deeper copies repeat the listed ones up to scaling, so a few levels show every kind of component.
  for (auto& c : components_upto(x, 4).components) {
    if (c.shape != Component::Shape::interval) continue;
    if (auto m = tower.recovery_index(c.lo, c.hi, k_max)) s.insert(*m);
  }
  return s;
}

std::vector<int> bits_profile(const Term& t, int count) {
  if (count < 1) fail(ErrorKind::range, "count must be positive");
  auto list = components_upto(t, 3);
  // Walk components and windows in order. A zeta block opens at a window whose
  // limit is its left end and closes at one whose limit is its right end.
  struct Item {
    Rat at;
    int kind;  // 0 component, 1 block opens, 2 block closes
  };
  std::vector<Item> items;
  for (auto& c : list.components) items.push_back({c.lo, 0});
  for (auto& w : list.windows) {
    if (w.limit == w.lo)
      items.push_back({w.lo, 1});
    else
      items.push_back({w.hi, 2});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.at != b.at) return a.at < b.at;
    return a.kind > b.kind;  // a window at a point sorts before the component starting there
  });
  std::vector<int> runs;
  int run = 0;
  bool inside = false;
  for (auto& it : items) {
    if (it.kind == 1) {
      if (inside) fail(ErrorKind::profile_mismatch, "nested accumulation windows");
      runs.push_back(run);
      inside = true;
    } else if (it.kind == 2) {
      if (!inside) fail(ErrorKind::profile_mismatch, "unbalanced accumulation window");
      inside = false;
      run = 0;
    } else if (!inside) {
      ++run;
    }
  }
  if (inside) fail(ErrorKind::profile_mismatch, "unterminated zeta block");
  if (runs.empty() || runs.front() != 1) fail(ErrorKind::profile_mismatch, "expected one component before the first zeta block");
  if (static_cast<int>(runs.size()) < count + 1) fail(ErrorKind::profile_mismatch, "not enough zeta blocks");
  std::vector<int> bits;
  for (int i = 1; i <= count; ++i) {
    int g = runs[i] - 2;
    if (g != 0 && g != 1) fail(ErrorKind::profile_mismatch, "isolated run of unexpected length");
    bits.push_back(g);
  }
  return bits;
}

}  // namespace scatterlab
