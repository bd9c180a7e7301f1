#include "scatterlab/derive.hpp"

#include "scatterlab/error.hpp"

namespace scatterlab {

using namespace terms;

namespace {

// Drops the points a and b from a closed core set; used to move gap ends of a
// Cantor orbit's seed into the Cantor set itself.
Term without_ends(const Term& t, const Rat& a, const Rat& b) {
  switch (t.kind()) {
    case Kind::point: {
      const Rat& p = t.as<Point>().at;
      return p == a || p == b ? empty() : t;
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(without_ends(p, a, b));
      return normalize(union_of(std::move(parts)));
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      bool keep = g.include_center && g.center != a && g.center != b;
      return normalize(geo(g.center, g.ratio, without_ends(g.seed, a, b), keep));
    }
    case Kind::interval: {
      auto& i = t.as<Interval>();
      if (!i.open && (i.lo == a || i.lo == b || i.hi == a || i.hi == b))
        fail(ErrorKind::not_supported, "cantor orbit seed reaches a gap end with an interval");
      return t;
    }
    default: return t;
  }
}

Term orbit_with_frame(const CantorOrbit& o, const Term& seed) {
  Rat w = o.hi - o.lo;
  Term inner = without_ends(seed, o.lo + w / 3, o.lo + 2 * w / 3);
  return normalize(union_of({cantor_orbit(o.lo, o.hi, inner), cantor(o.lo, o.hi)}));
}

}  // namespace

Term derive_lowered(const Term& t) {
  switch (t.kind()) {
    case Kind::empty:
    case Kind::point: return empty();
    case Kind::interval: {
      auto& i = t.as<Interval>();
      return interval(i.lo, i.hi);
    }
    case Kind::cantor: return t;
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(derive_lowered(p));
      return normalize(union_of(std::move(parts)));
    }
    case Kind::geo: {
      // Away from the center the copies are locally finite.
      auto& g = t.as<Geo>();
      return normalize(geo(g.center, g.ratio, derive_lowered(g.seed), true));
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      return orbit_with_frame(o, derive_lowered(o.seed));
    }
    default: return derive_lowered(lower(t));
  }
}

Term closure_lowered(const Term& t) {
  switch (t.kind()) {
    case Kind::interval: {
      auto& i = t.as<Interval>();
      return interval(i.lo, i.hi);
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(closure_lowered(p));
      return normalize(union_of(std::move(parts)));
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      return normalize(geo(g.center, g.ratio, closure_lowered(g.seed), true));
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      return orbit_with_frame(o, closure_lowered(o.seed));
    }
    case Kind::empty:
    case Kind::point:
    case Kind::cantor: return t;
    default: return closure_lowered(lower(t));
  }
}

KernelSplit split_lowered(const Term& t) {
  switch (t.kind()) {
    case Kind::empty: return {t, t};
    case Kind::point: return {empty(), t};
    case Kind::interval:
    case Kind::cantor: return {t, empty()};
    case Kind::union_: {
      // For closed pieces the kernel of a finite union is the union of the kernels:
      // a perfect set cannot have a nonempty countable relatively open part.
      std::vector<Term> k, s;
      for (auto& p : t.as<Union>().parts) {
        auto part = split_lowered(p);
        k.push_back(part.kernel);
        s.push_back(part.scattered);
      }
      return {normalize(union_of(std::move(k))), normalize(union_of(std::move(s)))};
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      auto seed = split_lowered(g.seed);
      bool center_in_kernel = g.include_center && !seed.kernel.is_empty();
      return {normalize(geo(g.center, g.ratio, seed.kernel, center_in_kernel)),
              normalize(geo(g.center, g.ratio, seed.scattered, g.include_center && !center_in_kernel))};
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      auto seed = split_lowered(o.seed);
      return {normalize(cantor_orbit(o.lo, o.hi, seed.kernel)),
              normalize(cantor_orbit(o.lo, o.hi, seed.scattered))};
    }
    default:
      if (is_core(t)) fail(ErrorKind::unsupported_split, std::string(kind_name(t.kind())));
      return split_lowered(lower(t));
  }
}

Term derive(const Term& t) { return raise(derive_lowered(lower(t))); }

Term closure(const Term& t) { return raise(closure_lowered(lower(t))); }

KernelSplit kernel_split(const Term& t) {
  auto s = split_lowered(lower(t));
  return {raise(s.kernel), raise(s.scattered)};
}

CBProfile cb_profile(const Term& t, int k_max) {
  if (k_max < 1) fail(ErrorKind::range, "k_max must be positive");
  CBProfile out;
  Term cur = lower(t);
  out.iterates.push_back(raise(cur));
  if (cur.is_empty()) {
    out.vanishing_index = 0;
    return out;
  }
  for (int k = 1; k <= k_max; ++k) {
    Term next = derive_lowered(cur);
    if (next == cur) {
      out.does_not_vanish = true;
      return out;
    }
    out.iterates.push_back(raise(next));
    if (next.is_empty()) {
      out.vanishing_index = k;
      return out;
    }
    cur = next;
  }
  return out;
}

std::set<int> signature(const Term& t, int k_max) {
  if (k_max < 1) fail(ErrorKind::range, "k_max must be positive");
  auto split = split_lowered(lower(t));
  std::set<int> sigma;
  if (split.kernel.is_empty()) return sigma;
  Term a = derive_lowered(split.scattered);
  for (int k = 1;; ++k) {
    if (a.is_empty()) break;
    Term b = derive_lowered(a);
    if (b == a) break;  // only a perfect set is left; later layers are empty
    if (k >= k_max) fail(ErrorKind::horizon_exceeded, "scattered part does not vanish by k_max");
    // The perfect part of P^(k) lies in P^(k+1), so only its scattered part can leave.
    auto layer = split_lowered(a).scattered;
    Meet m = common_points(layer, split.kernel);
    if (m.infinite) fail(ErrorKind::undecidable_pair, "layer meets the kernel in infinitely many points");
    for (auto& p : m.points)
      if (!member(b, p)) {
        sigma.insert(k);
        break;
      }
    a = b;
  }
  return sigma;
}

}  // namespace scatterlab
