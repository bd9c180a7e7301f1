#include "scatterlab/semantics.hpp"

#include "scatterlab/error.hpp"

#include <algorithm>
#include <set>

namespace scatterlab {

using namespace terms;

namespace {

const Rat kThird(1, 3);
const Rat kTwoThirds(2, 3);

// Membership in the standard Cantor set. Rational ternary expansions are
// eventually periodic, so the shift orbit is finite.
bool unit_cantor(Rat u) {
  std::set<Rat> seen;
  while (true) {
    if (u < 0 || u > 1) return false;
    if (u == 0 || u == 1) return true;
    if (!seen.insert(u).second) return true;
    if (u <= kThird) {
      u *= 3;
    } else if (u >= kTwoThirds) {
      u = 3 * u - 2;
    } else {
      return false;
    }
  }
}

std::optional<Rat> unit_ceil(Rat u) {
  if (u > 1) return std::nullopt;
  if (u <= 0) return Rat(0);
  if (unit_cantor(u)) return u;
  Rat off = 0, sc = 1;
  while (true) {
    if (u <= kThird) {
      u *= 3;
    } else if (u >= kTwoThirds) {
      off += sc * kTwoThirds;
      u = 3 * u - 2;
    } else {
      return off + sc * kTwoThirds;
    }
    sc /= 3;
  }
}

std::optional<Rat> unit_floor(const Rat& u) {
  auto c = unit_ceil(Rat(1) - u);
  if (!c) return std::nullopt;
  return Rat(1) - *c;
}

bool member_core(const Term& t, const Rat& x) {
  switch (t.kind()) {
    case Kind::empty: return false;
    case Kind::point: return t.as<Point>().at == x;
    case Kind::interval: {
      auto& i = t.as<Interval>();
      return i.open ? (i.lo < x && x < i.hi) : (i.lo <= x && x <= i.hi);
    }
    case Kind::cantor: {
      auto& c = t.as<Cantor>();
      return unit_cantor((x - c.lo) / (c.hi - c.lo));
    }
    case Kind::union_: {
      for (auto& p : t.as<Union>().parts) {
        auto h = hull(p);
        if (h && h->lo <= x && x <= h->hi && member_core(p, x)) return true;
      }
      return false;
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      if (x == g.center) return g.include_center;
      auto h = hull(g.seed);
      if (!h) return false;
      Rat reach = max(abs(h->lo - g.center), abs(h->hi - g.center));
      for (Rat y = x; abs(y - g.center) <= reach; y = g.center + (y - g.center) / g.ratio)
        if (h->lo <= y && y <= h->hi && member_core(g.seed, y)) return true;
      return false;
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      Rat w = o.hi - o.lo;
      Rat u = (x - o.lo) / w;
      std::set<Rat> seen;
      while (u > 0 && u < 1 && seen.insert(u).second) {
        if (u > kThird && u < kTwoThirds) return member_core(o.seed, o.lo + u * w);
        u = u <= kThird ? 3 * u : 3 * u - 2;
      }
      return false;
    }
    default: return member_core(lower(t), x);
  }
}

const Term& as_core(const Term& t, Term& storage) {
  if (is_core(t)) return t;
  storage = lower(t);
  return storage;
}

}  // namespace

void validate(const Term& t) { (void)lower(t); }

bool member(const Term& t, const Rat& x) {
  Term storage;
  return member_core(as_core(t, storage), x);
}

std::optional<Rat> cantor_ceil(const Rat& lo, const Rat& hi, const Rat& x) {
  auto u = unit_ceil((x - lo) / (hi - lo));
  if (!u) return std::nullopt;
  return lo + *u * (hi - lo);
}

std::optional<Rat> cantor_floor(const Rat& lo, const Rat& hi, const Rat& x) {
  auto u = unit_floor((x - lo) / (hi - lo));
  if (!u) return std::nullopt;
  return lo + *u * (hi - lo);
}

// ---------------------------------------------------------------- enumerate

namespace {

struct Raw {
  std::vector<Rat> points;
  std::vector<Piece> intervals;
  std::vector<Hull> windows;
};

// Appends the image of `a` under x -> s x + b, s > 0.
void append_mapped(const Raw& a, const Rat& s, const Rat& b, Raw& out) {
  for (auto& p : a.points) out.points.push_back(s * p + b);
  for (auto& i : a.intervals) out.intervals.push_back({s * i.lo + b, s * i.hi + b, i.open});
  for (auto& w : a.windows) out.windows.push_back({s * w.lo + b, s * w.hi + b});
}

// Affine maps of the Cantor words of length `len` on [lo, hi], as (scale, shift).
std::vector<std::pair<Rat, Rat>> cantor_words(const Rat& lo, const Rat& hi, int len) {
  std::vector<std::pair<Rat, Rat>> maps{{Rat(1), Rat(0)}};
  for (int k = 0; k < len; ++k) {
    std::vector<std::pair<Rat, Rat>> next;
    for (auto& [s, b] : maps) {
      next.emplace_back(s / 3, s * lo * kTwoThirds + b);
      next.emplace_back(s / 3, s * hi * kTwoThirds + b);
    }
    maps = std::move(next);
  }
  return maps;
}

void enum_core(const Term& t, int depth, Raw& out) {
  switch (t.kind()) {
    case Kind::empty: return;
    case Kind::point: out.points.push_back(t.as<Point>().at); return;
    case Kind::interval: {
      auto& i = t.as<Interval>();
      out.intervals.push_back({i.lo, i.hi, i.open});
      return;
    }
    case Kind::cantor: {
      auto& c = t.as<Cantor>();
      for (auto& [s, b] : cantor_words(c.lo, c.hi, depth)) {
        Rat a = s * c.lo + b, z = s * c.hi + b;
        out.points.push_back(a);
        out.points.push_back(z);
        out.windows.push_back({a, z});
      }
      return;
    }
    case Kind::union_:
      for (auto& p : t.as<Union>().parts) enum_core(p, depth, out);
      return;
    case Kind::geo: {
      auto& g = t.as<Geo>();
      Raw seed;
      enum_core(g.seed, depth, seed);
      for (int j = 0; j < depth; ++j) {
        Rat rj = pow(g.ratio, j);
        append_mapped(seed, rj, g.center * (Rat(1) - rj), out);
      }
      if (g.include_center) out.points.push_back(g.center);
      auto h = *hull(g.seed);
      Rat rd = pow(g.ratio, depth);
      Rat a = g.center + rd * (h.lo - g.center), z = g.center + rd * (h.hi - g.center);
      out.windows.push_back({min(a, g.center), max(z, g.center)});
      return;
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      Raw seed;
      enum_core(o.seed, depth, seed);
      for (int len = 0; len < depth; ++len)
        for (auto& [s, b] : cantor_words(o.lo, o.hi, len)) append_mapped(seed, s, b, out);
      for (auto& [s, b] : cantor_words(o.lo, o.hi, depth)) out.windows.push_back({s * o.lo + b, s * o.hi + b});
      return;
    }
    default: enum_core(lower(t), depth, out);
  }
}

}  // namespace

Approximation enumerate(const Term& t, int depth) {
  if (depth < 1) fail(ErrorKind::range, "depth must be positive");
  Term storage;
  Raw raw;
  enum_core(as_core(t, storage), depth, raw);
  Approximation a;
  a.depth = depth;
  std::sort(raw.points.begin(), raw.points.end());
  raw.points.erase(std::unique(raw.points.begin(), raw.points.end()), raw.points.end());
  std::sort(raw.intervals.begin(), raw.intervals.end(), [](const Piece& x, const Piece& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
  });
  raw.intervals.erase(std::unique(raw.intervals.begin(), raw.intervals.end()), raw.intervals.end());
  a.points = std::move(raw.points);
  a.intervals = std::move(raw.intervals);
  a.tolerance = pow(Rat(1, 2), depth);
  for (auto& w : raw.windows) a.tolerance = max(a.tolerance, w.hi - w.lo);
  a.windows = std::move(raw.windows);
  return a;
}

bool probe_equal(const Term& a, const Term& b, int depth) {
  Term la = lower(a), lb = lower(b);
  if (la == lb) return true;
  std::vector<Rat> probes;
  for (auto* t : {&la, &lb}) {
    auto ap = enumerate(*t, depth);
    probes.insert(probes.end(), ap.points.begin(), ap.points.end());
    for (auto& i : ap.intervals) {
      probes.push_back(i.lo);
      probes.push_back(i.hi);
      probes.push_back((i.lo + i.hi) / 2);
    }
    for (auto& w : ap.windows) {
      probes.push_back(w.lo);
      probes.push_back(w.hi);
    }
  }
  return std::all_of(probes.begin(), probes.end(),
                     [&](const Rat& x) { return member_core(la, x) == member_core(lb, x); });
}

// ---------------------------------------------------------------- meets

namespace {

Meet merge(Meet a, const Meet& b) {
  a.infinite = a.infinite || b.infinite;
  a.points.insert(a.points.end(), b.points.begin(), b.points.end());
  std::sort(a.points.begin(), a.points.end());
  a.points.erase(std::unique(a.points.begin(), a.points.end()), a.points.end());
  if (a.infinite) a.points.clear();
  return a;
}

Meet just(const Rat& p) { return Meet{false, {p}}; }

[[noreturn]] void undecidable(const Term& a, const Term& b) {
  fail(ErrorKind::undecidable_pair, std::string("cannot decide intersection of ") +
                                        std::string(kind_name(a.kind())) + " and " +
                                        std::string(kind_name(b.kind())));
}

// Whether Cantor(ilo, ihi) is the Cantor set of a stage interval of Cantor(lo, hi).
bool aligned(const Rat& lo, const Rat& hi, const Rat& ilo, const Rat& ihi) {
  Rat w = (ihi - ilo) / (hi - lo);
  mpz_class p3 = 1;
  while (w < 1) {
    w *= 3;
    p3 *= 3;
  }
  if (w != 1) return false;
  Rat n = (ilo - lo) / (hi - lo) * from_integer(p3);
  if (!n.is_integer() || n.sign() < 0 || n + 1 > from_integer(p3)) return false;
  mpz_class z = n.num();
  while (z > 0) {
    mpz_class d = z % 3;
    if (d == 1) return false;
    z /= 3;
  }
  return true;
}

Meet cp(const Term& a, const Term& b);

Meet cp_interval_cantor(const Interval& i, const Cantor& c) {
  Rat l = max(i.lo, c.lo), h = min(i.hi, c.hi);
  auto p = cantor_ceil(c.lo, c.hi, l), q = cantor_floor(c.lo, c.hi, h);
  if (!p || !q || *p > *q) return {};
  Meet m;
  if (*p == *q) {
    m.points = {*p};
  } else {
    Rat mid = (*p + *q) / 2;
    if (!member_core(cantor(c.lo, c.hi), mid) && cantor_ceil(c.lo, c.hi, mid) == *q &&
        cantor_floor(c.lo, c.hi, mid) == *p)
      m.points = {*p, *q};
    else
      return Meet{true, {}};
  }
  if (i.open)
    std::erase_if(m.points, [&](const Rat& x) { return x == i.lo || x == i.hi; });
  return m;
}

Meet cp_geo(const Geo& g, const Term& self, const Term& x) {
  auto hx = *hull(x);
  const Rat& c = g.center;
  auto hs = *hull(g.seed);
  Rat reach = max(abs(hs.lo - c), abs(hs.hi - c));
  if (c < hx.lo || c > hx.hi) {
    Rat dist = c < hx.lo ? hx.lo - c : c - hx.hi;
    Meet m;
    for (long j = 0; pow(g.ratio, j) * reach >= dist; ++j) m = merge(m, cp(geo_copy(g, j), x));
    return m;
  }
  Meet m;
  if (g.include_center && member_core(x, c)) m.points.push_back(c);
  bool below = hs.hi < c;
  if (auto* i = x.get_if<Interval>()) {
    if (below ? i->lo < c : i->hi > c) return Meet{true, {}};
    return m;
  }
  if (auto* h = x.get_if<Geo>(); h && h->center == c && h->ratio == g.ratio) {
    // Both sets are invariant under the contraction, so one shared point repeats forever.
    Term other_seed = h->seed;
    if (!cp(g.seed, x).empty() || !cp(other_seed, self).empty()) return Meet{true, {}};
    return m;
  }
  undecidable(self, x);
}

Meet cp_orbit(const CantorOrbit& o, const Term& self, const Term& x) {
  if (auto* i = x.get_if<Interval>()) {
    Rat l = max(i->lo, o.lo), h = min(i->hi, o.hi);
    Rat mid = (l + h) / 2;
    if (member_core(cantor(o.lo, o.hi), mid)) return Meet{true, {}};
    // A Cantor point strictly inside means a whole stage interval fits inside.
    if (*cantor_floor(o.lo, o.hi, mid) > l || *cantor_ceil(o.lo, o.hi, mid) < h) return Meet{true, {}};
    // The open part lies in a single gap, which holds exactly one seed image.
    Rat w = o.hi - o.lo;
    Rat u = (mid - o.lo) / w;
    Rat s = 1, b = 0;
    while (u <= kThird || u >= kTwoThirds) {
      if (u <= kThird) {
        b += s * o.lo * kTwoThirds;
        u *= 3;
      } else {
        b += s * o.hi * kTwoThirds;
        u = 3 * u - 2;
      }
      s /= 3;
    }
    return cp(transform(o.seed, s, b), x);
  }
  if (auto* c = x.get_if<Cantor>(); c && aligned(o.lo, o.hi, c->lo, c->hi)) return {};
  undecidable(self, x);
}

Meet cp(const Term& a, const Term& b) {
  if (a.is_empty() || b.is_empty()) return {};
  auto ha = *hull(a), hb = *hull(b);
  if (ha.hi < hb.lo || hb.hi < ha.lo) return {};
  if (auto* p = a.get_if<Point>()) return member_core(b, p->at) ? just(p->at) : Meet{};
  if (auto* p = b.get_if<Point>()) return member_core(a, p->at) ? just(p->at) : Meet{};
  if (ha.hi == hb.lo || hb.hi == ha.lo) {
    Rat p = ha.hi == hb.lo ? ha.hi : hb.hi;
    return member_core(a, p) && member_core(b, p) ? just(p) : Meet{};
  }
  if (auto* u = a.get_if<Union>()) {
    Meet m;
    for (auto& part : u->parts) m = merge(m, cp(part, b));
    return m;
  }
  if (auto* u = b.get_if<Union>()) {
    Meet m;
    for (auto& part : u->parts) m = merge(m, cp(a, part));
    return m;
  }
  if (auto* g = a.get_if<Geo>()) return cp_geo(*g, a, b);
  if (auto* g = b.get_if<Geo>()) return cp_geo(*g, b, a);
  if (auto* o = a.get_if<CantorOrbit>()) return cp_orbit(*o, a, b);
  if (auto* o = b.get_if<CantorOrbit>()) return cp_orbit(*o, b, a);
  if (a.kind() == Kind::interval && b.kind() == Kind::interval) return Meet{true, {}};
  if (auto* i = a.get_if<Interval>(); i && b.kind() == Kind::cantor)
    return cp_interval_cantor(*i, b.as<Cantor>());
  if (auto* i = b.get_if<Interval>(); i && a.kind() == Kind::cantor)
    return cp_interval_cantor(*i, a.as<Cantor>());
  auto& x = a.as<Cantor>();
  auto& y = b.as<Cantor>();
  if (aligned(x.lo, x.hi, y.lo, y.hi) || aligned(y.lo, y.hi, x.lo, x.hi)) return Meet{true, {}};
  undecidable(a, b);
}

}  // namespace

Meet common_points(const Term& a, const Term& b) {
  Term sa, sb;
  return cp(as_core(a, sa), as_core(b, sb));
}

bool meets(const Term& a, const Term& b) { return !common_points(a, b).empty(); }

}  // namespace scatterlab
