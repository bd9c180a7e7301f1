#include "scatterlab/lowered.hpp"

#include "scatterlab/error.hpp"
#include "scatterlab/semantics.hpp"

#include <algorithm>

namespace scatterlab {

using namespace terms;

namespace {

std::optional<Hull> join(std::optional<Hull> a, const std::optional<Hull>& b) {
  if (!a) return b;
  if (!b) return a;
  return Hull{min(a->lo, b->lo), max(a->hi, b->hi)};
}

Rat affine_at(const Rat& scale, const Rat& shift, const Rat& x) { return scale * x + shift; }

// Checks that a normalized geo node is well formed: the seed sits strictly on
// one side of the center and consecutive copies do not overlap.
void check_geo(const Geo& g) {
  auto h = hull(g.seed);
  if (!h) return;
  const Rat& c = g.center;
  if (h->hi < c) {
    if (g.center + g.ratio * (h->lo - c) < h->hi)
      fail(ErrorKind::validation, "geo copies overlap");
  } else if (h->lo > c) {
    if (g.center + g.ratio * (h->hi - c) > h->lo)
      fail(ErrorKind::validation, "geo copies overlap");
  } else {
    fail(ErrorKind::validation, "geo seed must lie strictly on one side of the center");
  }
}

void check_orbit(const CantorOrbit& o) {
  auto h = hull(o.seed);
  if (!h) return;
  Rat w = o.hi - o.lo;
  Rat a = o.lo + w / 3, b = o.lo + 2 * w / 3;
  if (h->lo < a || h->hi > b || member(o.seed, a) || member(o.seed, b))
    fail(ErrorKind::validation, "cantor orbit seed must lie in the open middle third");
}

}  // namespace

std::optional<Hull> hull(const Term& t) {
  switch (t.kind()) {
    case Kind::empty: return std::nullopt;
    case Kind::point: { const Rat& p = t.as<Point>().at; return Hull{p, p}; }
    case Kind::interval: { auto& i = t.as<Interval>(); return Hull{i.lo, i.hi}; }
    case Kind::cantor: { auto& c = t.as<Cantor>(); return Hull{c.lo, c.hi}; }
    case Kind::union_: {
      std::optional<Hull> h;
      for (auto& p : t.as<Union>().parts) h = join(h, hull(p));
      return h;
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      auto h = hull(g.seed);
      if (!h) return g.include_center ? std::optional<Hull>(Hull{g.center, g.center}) : std::nullopt;
      return join(h, Hull{g.center, g.center});
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      if (!hull(o.seed)) return std::nullopt;
      return Hull{o.lo, o.hi};
    }
    default: return hull(lower(t));
  }
}

bool is_core(const Term& t) {
  switch (t.kind()) {
    case Kind::empty:
    case Kind::point:
    case Kind::interval:
    case Kind::cantor: return true;
    case Kind::union_:
      return std::all_of(t.as<Union>().parts.begin(), t.as<Union>().parts.end(), is_core);
    case Kind::geo: return is_core(t.as<Geo>().seed);
    case Kind::cantor_orbit: return is_core(t.as<CantorOrbit>().seed);
    default: return false;
  }
}

Term transform(const Term& t, const Rat& s, const Rat& b) {
  if (s == 1 && b == 0) return t;
  switch (t.kind()) {
    case Kind::empty: return t;
    case Kind::point: return point(affine_at(s, b, t.as<Point>().at));
    case Kind::interval: {
      auto& i = t.as<Interval>();
      Rat x = affine_at(s, b, i.lo), y = affine_at(s, b, i.hi);
      return s.sign() > 0 ? interval(x, y, i.open) : interval(y, x, i.open);
    }
    case Kind::cantor: {
      auto& c = t.as<Cantor>();
      Rat x = affine_at(s, b, c.lo), y = affine_at(s, b, c.hi);
      return s.sign() > 0 ? cantor(x, y) : cantor(y, x);
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(transform(p, s, b));
      return normalize(union_of(std::move(parts)));
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      return geo(affine_at(s, b, g.center), g.ratio, transform(g.seed, s, b), g.include_center);
    }
    case Kind::cantor_orbit: {
      // The orbit of the reflected frame is the reflected orbit, by symmetry of the two maps.
      auto& o = t.as<CantorOrbit>();
      Rat x = affine_at(s, b, o.lo), y = affine_at(s, b, o.hi);
      Term seed = transform(o.seed, s, b);
      return s.sign() > 0 ? cantor_orbit(x, y, seed) : cantor_orbit(y, x, seed);
    }
    default: return transform(lower(t), s, b);
  }
}

Term geo_copy(const Geo& g, long j) {
  Rat rj = pow(g.ratio, j);
  return transform(g.seed, rj, g.center * (Rat(1) - rj));
}

namespace {

void flatten_into(const Term& t, std::vector<Term>& out) {
  if (t.kind() == Kind::union_) {
    for (auto& p : t.as<Union>().parts) flatten_into(p, out);
  } else if (!t.is_empty()) {
    out.push_back(t);
  }
}

bool interval_covers(const Interval& i, const Rat& p) {
  return i.open ? (i.lo < p && p < i.hi) : (i.lo <= p && p <= i.hi);
}

// Tries to fold `next` into `last`; both come from the sorted part list.
bool absorb(Term& last, const Term& next) {
  if (compare(last, next) == 0) return true;
  if (auto* a = last.get_if<Interval>()) {
    if (auto* b = next.get_if<Interval>(); b && !a->open && !b->open && b->lo <= a->hi) {
      last = interval(a->lo, max(a->hi, b->hi));
      return true;
    }
    if (auto* p = next.get_if<Point>(); p && interval_covers(*a, p->at)) return true;
  }
  if (auto* p = last.get_if<Point>()) {
    if (auto* b = next.get_if<Interval>(); b && interval_covers(*b, p->at)) {
      last = next;
      return true;
    }
    if (auto* g = next.get_if<Geo>(); g && g->center == p->at) {
      last = geo(g->center, g->ratio, g->seed, true);
      return true;
    }
  }
  if (auto* g = last.get_if<Geo>()) {
    if (auto* p = next.get_if<Point>(); p && g->center == p->at) {
      if (!g->include_center) last = geo(g->center, g->ratio, g->seed, true);
      return true;
    }
    if (auto* h = next.get_if<Geo>();
        h && h->center == g->center && h->ratio == g->ratio && h->seed == g->seed) {
      last = geo(g->center, g->ratio, g->seed, g->include_center || h->include_center);
      return true;
    }
  }
  return false;
}

}  // namespace

Term normalize(const Term& t) {
  switch (t.kind()) {
    case Kind::geo: {
      auto& g = t.as<Geo>();
      Term seed = normalize(g.seed);
      if (seed.is_empty()) return g.include_center ? point(g.center) : empty();
      Geo out{g.center, g.ratio, seed, g.include_center};
      check_geo(out);
      return seed == g.seed ? t : geo(out.center, out.ratio, seed, out.include_center);
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      Term seed = normalize(o.seed);
      if (seed.is_empty()) return empty();
      CantorOrbit out{o.lo, o.hi, seed};
      check_orbit(out);
      return seed == o.seed ? t : cantor_orbit(o.lo, o.hi, seed);
    }
    case Kind::union_: {
      std::vector<Term> flat;
      for (auto& p : t.as<Union>().parts) flatten_into(normalize(p), flat);
      std::vector<std::pair<Hull, Term>> keyed;
      for (auto& p : flat) keyed.emplace_back(*hull(p), p);
      std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.lo != b.first.lo) return a.first.lo < b.first.lo;
        if (a.first.hi != b.first.hi) return a.first.hi < b.first.hi;
        return compare(a.second, b.second) < 0;
      });
      std::vector<Term> out;
      for (auto& [h, p] : keyed) {
        if (!out.empty() && absorb(out.back(), p)) continue;
        out.push_back(p);
      }
      // Merging can widen an interval enough to swallow points already emitted.
      bool changed = true;
      while (changed && out.size() > 1) {
        changed = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
          Term a = out[i];
          if (absorb(a, out[i + 1])) {
            out[i] = a;
            out.erase(out.begin() + static_cast<long>(i) + 1);
            changed = true;
            break;
          }
          Term b = out[i + 1];
          if (b.kind() == Kind::interval && out[i].kind() == Kind::point && absorb(b, out[i])) {
            out[i] = b;
            out.erase(out.begin() + static_cast<long>(i) + 1);
            changed = true;
            break;
          }
        }
      }
      if (out.empty()) return empty();
      if (out.size() == 1) return out.front();
      return union_of(std::move(out));
    }
    default: return t;
  }
}

namespace {

// Thickening of a closed well-ordered core set. `cap` bounds every radius
// (none means unbounded); `last` is the radius at the maximum, none to omit it.
Term thick(const Term& x, const std::optional<Rat>& cap, const std::optional<Rat>& last) {
  auto eps = [&](const Rat& v) { return cap ? min(*cap, v) : v; };
  switch (x.kind()) {
    case Kind::empty: return x;
    case Kind::point: {
      const Rat& p = x.as<Point>().at;
      return last ? interval(p, p + *last) : empty();
    }
    case Kind::union_: {
      auto& parts = x.as<Union>().parts;
      std::vector<Term> out;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size()) {
          out.push_back(thick(parts[i], cap, last));
          break;
        }
        Rat hi = hull(parts[i])->hi, lo = hull(parts[i + 1])->lo;
        if (!(hi < lo)) fail(ErrorKind::not_well_ordered, "thicken: union parts must have disjoint bounds");
        out.push_back(thick(parts[i], cap, eps((lo - hi) / 2)));
      }
      return union_of(std::move(out));
    }
    case Kind::geo: {
      auto& g = x.as<Geo>();
      auto h = hull(g.seed);
      if (!g.include_center || h->hi >= g.center)
        fail(ErrorKind::not_well_ordered, "thicken: inner set must be closed and well ordered");
      const Rat& c = g.center;
      const Rat& r = g.ratio;
      Rat gap = c + r * (h->lo - c) - h->hi;  // between the seed and its first copy
      Rat reach = max((h->hi - h->lo) / 2, gap / 2);
      long j0 = 0;
      if (cap)
        while (pow(r, j0) * reach > *cap) ++j0;
      std::vector<Term> out;
      for (long j = 0; j < j0; ++j) {
        Rat rj = pow(r, j);
        std::optional<Rat> seed_last;
        if (gap.sign() > 0) seed_last = eps(rj * gap / 2) / rj;
        out.push_back(transform(thick(g.seed, *cap / rj, seed_last), rj, c * (Rat(1) - rj)));
      }
      // From copy j0 on no cap is active, so the copies are exact scalings of one another.
      std::optional<Rat> tail_last;
      if (gap.sign() > 0) tail_last = gap / 2;
      Rat rj0 = pow(r, j0);
      out.push_back(geo(c, r, transform(thick(g.seed, std::nullopt, tail_last), rj0, c * (Rat(1) - rj0)), false));
      if (last) out.push_back(interval(c, c + *last));
      return union_of(std::move(out));
    }
    default:
      fail(ErrorKind::not_well_ordered, "thicken: inner set must be closed and well ordered");
  }
}

}  // namespace

Term lower(const Term& t) {
  switch (t.kind()) {
    case Kind::empty:
    case Kind::point:
    case Kind::interval:
    case Kind::cantor: return t;
    case Kind::ladder: {
      auto& l = t.as<Ladder>();
      return normalize(geo(l.target, l.ratio, point(l.target - l.offset0), l.include_target));
    }
    case Kind::fwrap: {
      auto& f = t.as<FWrap>();
      Term inner = lower(f.inner);
      auto h = hull(inner);
      if (h && (h->lo < 0 || h->hi > 1)) fail(ErrorKind::validation, "fwrap inner set must lie in [0, 1]");
      return normalize(geo(1, Rat(1, 2), transform(inner, Rat(1, 2), 0), f.include_top));
    }
    case Kind::affine: {
      auto& a = t.as<Affine>();
      return normalize(transform(lower(a.inner), a.scale, a.shift));
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(lower(p));
      return normalize(union_of(std::move(parts)));
    }
    case Kind::thicken: {
      auto& th = t.as<Thicken>();
      return normalize(thick(lower(th.inner), th.cap, th.cap));
    }
    case Kind::mirror: {
      auto& m = t.as<Mirror>();
      Term inner = lower(m.inner);
      return normalize(union_of({inner, transform(inner, -1, 2 * m.center)}));
    }
    case Kind::endpoints: return endpoint_set(lower(t.as<EndpointSet>().of));
    case Kind::geo: {
      auto& g = t.as<Geo>();
      return normalize(geo(g.center, g.ratio, lower(g.seed), g.include_center));
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      return normalize(cantor_orbit(o.lo, o.hi, lower(o.seed)));
    }
  }
  return t;
}

Term raise(const Term& t) {
  switch (t.kind()) {
    case Kind::geo: {
      auto& g = t.as<Geo>();
      const Rat& c = g.center;
      if (auto* p = g.seed.get_if<Point>(); p && p->at < c)
        return ladder(c, c - p->at, g.ratio, g.include_center);
      auto h = hull(g.seed);
      if (g.ratio == Rat(1, 2) && h->lo >= c - 1 && h->hi <= c - Rat(1, 2)) {
        Term inner = transform(g.seed, 2, -2 * (c - 1));
        Term fw = fwrap(raise(inner), g.include_center);
        return c == 1 ? fw : affine(1, c - 1, fw);
      }
      return geo(c, g.ratio, raise(g.seed), g.include_center);
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(raise(p));
      return union_of(std::move(parts));
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      return cantor_orbit(o.lo, o.hi, raise(o.seed));
    }
    default: return t;
  }
}

Term canonical(const Term& t) { return raise(lower(t)); }

Term endpoint_set(const Term& t) {
  switch (t.kind()) {
    case Kind::empty: return t;
    case Kind::interval: {
      auto& i = t.as<Interval>();
      if (i.open) fail(ErrorKind::not_interval_union, "open interval is not a closed component");
      return union_of({point(i.lo), point(i.hi)});
    }
    case Kind::union_: {
      auto& parts = t.as<Union>().parts;
      std::vector<Term> out;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size()) {
          Rat hi = hull(parts[i])->hi, lo = hull(parts[i + 1])->lo;
          if (hi > lo) fail(ErrorKind::not_interval_union, "interleaved parts");
          if (hi == lo && member(parts[i], hi) && member(parts[i + 1], lo))
            fail(ErrorKind::not_interval_union, "parts share a boundary point");
        }
        out.push_back(endpoint_set(parts[i]));
      }
      return normalize(union_of(std::move(out)));
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      if (g.include_center) fail(ErrorKind::not_interval_union, "isolated limit point");
      auto h = hull(g.seed);
      const Rat& c = g.center;
      Term next = geo_copy(g, 1);
      Rat inner_end = h->hi < c ? h->hi : h->lo;
      Rat next_end = c + g.ratio * ((h->hi < c ? h->lo : h->hi) - c);
      if (h->hi < c ? next_end < inner_end : next_end > inner_end)
        fail(ErrorKind::not_interval_union, "overlapping copies");
      if (next_end == inner_end && member(g.seed, inner_end) && member(next, next_end))
        fail(ErrorKind::not_interval_union, "copies share a boundary point");
      return normalize(geo(c, g.ratio, endpoint_set(g.seed), false));
    }
    default: fail(ErrorKind::not_interval_union, std::string("not an interval union: ") + std::string(kind_name(t.kind())));
  }
}

}  // namespace scatterlab
