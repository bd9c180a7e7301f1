#include "scatterlab/families.hpp"

#include "scatterlab/error.hpp"

#include <algorithm>
#include <array>

namespace scatterlab {

using namespace terms;

namespace {

void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

void require_subset(const std::set<int>& S, int lo, int hi, const char* what) {
  require(!S.empty(), ErrorKind::range, std::string(what) + ": S must be nonempty");
  for (int s : S)
    require(s >= lo && s <= hi, ErrorKind::range,
            std::string(what) + ": elements of S must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

Rat compression(const std::set<int>& S) { return Rat(1, 5L * *S.rbegin() + 5); }

}  // namespace

Term build_Kn(int n) {
  require(n >= 1 && n <= 8, ErrorKind::range, "build_Kn: n must lie in 1..8");
  Term a = ladder(1, 1, Rat(1, 2), true);
  for (int i = 1; i < n; ++i) a = fwrap(a, true);
  return affine(1, 5 * n, a);
}

Term build_XS(const std::set<int>& S) {
  require_subset(S, 1, 5, "build_XS");
  std::vector<Term> blocks;
  for (int n : S) blocks.push_back(mirror(5 * n + 2, thicken(build_Kn(n), 1)));
  return union_of({affine(compression(S), 0, union_of(std::move(blocks))), interval(1, 2)});
}

CubeFamily lift_cubes(const Term& t, int n, int depth) {
  require(n >= 1 && n <= 3, ErrorKind::range, "lift_cubes: dimension must lie in 1..3");
  CubeFamily fam;
  fam.dimension = n;
  fam.scaffold = t;
  for (auto& c : components_upto(t, depth).components) {
    if (c.shape != Component::Shape::interval) fail(ErrorKind::structural_mismatch, "lift_cubes: point component");
    fam.members.push_back({Box{std::vector<Rat>(n, c.lo), c.hi - c.lo, c.open}, c.lo, c.hi});
  }
  return fam;
}

FrameRegion build_frame(int m, bool integer_scaled) {
  require(m >= 1 && m <= 20, ErrorKind::range, "build_frame: m must lie in 1..20");
  Rat e = pow(Rat(1, 2), m);
  Rat t = integer_scaled ? pow(Rat(4), m) * Rat(2 * m + 1) : Rat(1);
  Rat l = e / Rat(2 * m + 1);
  FrameRegion f;
  f.outer = Box{{e * t, e * t}, e * t, false};
  for (int k = 1; k <= m; ++k) {
    Rat c = (e + Rat(2 * k - 1) * l) * t;
    f.holes.push_back(Box{{c, c}, l * t, true});
  }
  return f;
}

Frames build_frames(const std::set<int>& S, bool integer_scaled) {
  require(!S.empty(), ErrorKind::range, "build_frames: S must be nonempty");
  for (int m : S)
    require(m >= 2 && m <= 20 && m % 2 == 0, ErrorKind::range, "build_frames: S must consist of even numbers in 2..20");
  Frames out;
  out.base = Box{{Rat(-1), Rat(-1)}, Rat(1), false};
  for (int m : S) {
    out.ms.push_back(m);
    out.frames.push_back(build_frame(m, integer_scaled));
  }
  return out;
}

BoxUnion build_YS_prop3(const std::set<int>& S, int n, int windows) {
  require(n >= 1 && n <= 3, ErrorKind::range, "build_YS_prop3: dimension must lie in 1..3");
  require(windows >= 1 && windows <= 6, ErrorKind::range, "build_YS_prop3: windows must lie in 1..6");
  for (int s : S) require(s >= 1 && s <= 3 && s <= windows, ErrorKind::range, "build_YS_prop3: S must lie in 1..3");
  BoxUnion u;
  u.dimension = n;
  u.boxes.push_back(Box{std::vector<Rat>(n, Rat(-1)), Rat(1), true});
  for (int m = 1; m <= windows; ++m) {
    Rat lo = pow(Rat(1, 4), m);  // the window is ]4^-m, 2 * 4^-m[ ^ n
    int k = S.count(m) ? m + 1 : 1;
    Rat sub = lo / Rat(k);
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<Rat> corner;
      for (int i : idx) corner.push_back(lo + Rat(i) * sub);
      u.boxes.push_back(Box{corner, sub, true});
      int d = 0;
      while (d < n && ++idx[d] == k) idx[d++] = 0;
      if (d == n) break;
    }
  }
  return u;
}

Term build_Zn(int n) {
  Rat a = 6 * n + 1, b = 6 * n + 2;
  Rat r(1, 9);
  return union_of({geo(a, r, interval(a + Rat(1, 9), a + Rat(1, 3), true), false),
                   geo(b, r, interval(b - Rat(1, 3), b - Rat(1, 9), true), false)});
}

Term build_Ug(const std::vector<int>& bits) {
  require(bits.size() <= 12, ErrorKind::range, "build_Ug: at most 12 bits");
  std::vector<Term> parts;
  for (int n = 1; n <= static_cast<int>(bits.size()) + 1; ++n) {
    parts.push_back(interval(6 * n, 6 * n + 1, true));
    parts.push_back(build_Zn(n));
    parts.push_back(interval(6 * n + 2, 6 * n + 3, true));
    if (n <= static_cast<int>(bits.size())) {
      require(bits[n - 1] == 0 || bits[n - 1] == 1, ErrorKind::validation, "build_Ug: bits must be 0 or 1");
      if (bits[n - 1] == 1) parts.push_back(interval(6 * n + 4, 6 * n + 5, true));
    }
  }
  return union_of(std::move(parts));
}

Term build_YS_td(const std::set<int>& S) {
  require_subset(S, 1, 6, "build_YS_td");
  std::vector<Term> blocks;
  for (int n : S) {
    blocks.push_back(build_Kn(n));
    blocks.push_back(cantor(5 * n + 1, 5 * n + 2));
  }
  return union_of({affine(compression(S), 0, union_of(std::move(blocks))), point(1)});
}

namespace {

// Points x + (y - x) 2^-k and y - (y - x) 2^-k, k >= 1, accumulating at both ends of ]x, y[.
Term gap_ladders(const Rat& x, const Rat& y) {
  Rat w = y - x;
  return union_of({geo(x, Rat(1, 2), point(x + w / 2), false), geo(y, Rat(1, 2), point(y - w / 4), false)});
}

Term approximant(const Term& t) {
  switch (t.kind()) {
    case Kind::point: return empty();
    case Kind::union_: {
      auto& parts = t.as<Union>().parts;
      std::vector<Term> out;
      for (size_t i = 0; i < parts.size(); ++i) {
        out.push_back(approximant(parts[i]));
        if (i + 1 == parts.size()) break;
        Rat hi = hull(parts[i])->hi, lo = hull(parts[i + 1])->lo;
        if (hi > lo) fail(ErrorKind::validation, "discrete_approximant: interleaved parts");
        if (hi < lo) out.push_back(gap_ladders(hi, lo));
      }
      return union_of(std::move(out));
    }
    case Kind::cantor: {
      auto& c = t.as<Cantor>();
      Rat w = c.hi - c.lo;
      return cantor_orbit(c.lo, c.hi, gap_ladders(c.lo + w / 3, c.lo + 2 * w / 3));
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      if (!g.include_center) fail(ErrorKind::validation, "discrete_approximant: set is not compact");
      auto h = *hull(g.seed);
      const Rat& c = g.center;
      std::vector<Term> seed{approximant(g.seed)};
      if (h.hi < c) {
        Rat next = c + g.ratio * (h.lo - c);
        if (next > h.hi) seed.push_back(gap_ladders(h.hi, next));
      } else {
        Rat next = c + g.ratio * (h.hi - c);
        if (next < h.lo) seed.push_back(gap_ladders(next, h.lo));
      }
      return geo(c, g.ratio, union_of(std::move(seed)), false);
    }
    case Kind::interval: fail(ErrorKind::not_totally_disconnected, "discrete_approximant: interval leaf");
    default: fail(ErrorKind::validation, "discrete_approximant: set is not compact");
  }
}

}  // namespace

Term discrete_approximant(const Term& a) {
  Term core = lower(a);
  if (core.is_empty()) fail(ErrorKind::validation, "discrete_approximant: empty set");
  if (auto* p = core.get_if<Point>()) return raise(geo(p->at, Rat(1, 2), point(p->at + 1), false));
  return raise(normalize(approximant(core)));
}

Term G_group(int p, int n) {
  Rat base = pow(Rat(p), n);
  std::vector<Term> pts;
  for (int k = 1; k <= p; ++k) pts.push_back(point(base + Rat(1) / (Rat(k) * base)));
  return union_of(std::move(pts));
}

namespace {
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

Term build_AS(const std::set<int>& S, int N) {
  require(!S.empty(), ErrorKind::range, "build_AS: S must be nonempty");
  require(N >= 1 && N <= 8, ErrorKind::range, "build_AS: N must lie in 1..8");
  for (int p : S) {
    require(is_prime(p), ErrorKind::validation, "build_AS: " + std::to_string(p) + " is not prime");
    require(p <= 13, ErrorKind::range, "build_AS: primes must be among the first six");
  }
  std::vector<Term> groups;
  for (int p : S)
    for (int n = 1; n <= N; ++n) groups.push_back(G_group(p, n));
  return union_of(std::move(groups));
}

Term build_Xu(const Rat& u, int N, bool open) {
  require(u >= 2, ErrorKind::range, "build_Xu: u must be at least 2");
  require(N >= 1 && N <= 12, ErrorKind::range, "build_Xu: N must lie in 1..12");
  std::vector<Term> parts;
  Rat a = 1;
  for (int n = 1; n <= N; ++n) {
    Rat w = pow(u, n);
    parts.push_back(interval(a, a + w, open));
    a += w + 1;
  }
  return union_of(std::move(parts));
}

namespace {

Term midpoints(const Term& t, const Term& whole) {
  switch (t.kind()) {
    case Kind::empty:
    case Kind::point: return t;
    case Kind::interval: {
      auto& i = t.as<Interval>();
      return point((i.lo + i.hi) / 2);
    }
    case Kind::union_: {
      std::vector<Term> parts;
      for (auto& p : t.as<Union>().parts) parts.push_back(midpoints(p, whole));
      return union_of(std::move(parts));
    }
    case Kind::geo: {
      // The center is its own component unless another piece covers it.
      auto& g = t.as<Geo>();
      bool own = false;
      if (g.include_center) {
        own = true;
        if (auto* u = whole.get_if<Union>())
          for (auto& p : u->parts)
            if (auto* i = p.get_if<Interval>(); i && i->lo <= g.center && g.center <= i->hi) own = false;
      }
      return geo(g.center, g.ratio, midpoints(g.seed, g.seed), own);
    }
    default: fail(ErrorKind::not_supported, "representative_points: unsupported leaf");
  }
}

}  // namespace

Term representative_points(const Term& t) {
  Term core = lower(t);
  return raise(normalize(midpoints(core, core)));
}

namespace {
constexpr std::array<std::pair<FamilyId, std::string_view>, 11> kFamilyNames{{
    {FamilyId::kn, "kn"},
    {FamilyId::xs, "xs"},
    {FamilyId::xs_cubes, "xs_cubes"},
    {FamilyId::frames_zs, "frames_zs"},
    {FamilyId::frame, "frame"},
    {FamilyId::ys_prop3, "ys_prop3"},
    {FamilyId::ug, "ug"},
    {FamilyId::ys_td, "ys_td"},
    {FamilyId::discrete, "discrete"},
    {FamilyId::as_primes, "as_primes"},
    {FamilyId::xu, "xu"},
}};
}  // namespace

std::string_view family_name(FamilyId id) {
  for (auto& [k, v] : kFamilyNames)
    if (k == id) return v;
  return "?";
}

FamilyId parse_family(std::string_view name) {
  for (auto& [k, v] : kFamilyNames)
    if (v == name) return k;
  fail(ErrorKind::usage, "unknown family '" + std::string(name) + "'");
}

void validate_spec(const FamilySpec& s) {
  switch (s.id) {
    case FamilyId::kn: require(s.n >= 1 && s.n <= 8, ErrorKind::range, "kn: n must lie in 1..8"); break;
    case FamilyId::xs: require_subset(s.S, 1, 5, "xs"); break;
    case FamilyId::xs_cubes:
      require_subset(s.S, 1, 5, "xs_cubes");
      require(s.n >= 1 && s.n <= 3, ErrorKind::range, "xs_cubes: dimension must lie in 1..3");
      require(s.depth >= 1 && s.depth <= 8, ErrorKind::range, "xs_cubes: depth must lie in 1..8");
      break;
    case FamilyId::frames_zs:
      require(!s.S.empty(), ErrorKind::range, "frames_zs: S must be nonempty");
      for (int m : s.S)
        require(m >= 2 && m <= 20 && m % 2 == 0, ErrorKind::range, "frames_zs: S must consist of even numbers in 2..20");
      break;
    case FamilyId::frame: require(s.n >= 1 && s.n <= 20, ErrorKind::range, "frame: m must lie in 1..20"); break;
    case FamilyId::ys_prop3:
      require(s.n >= 1 && s.n <= 3, ErrorKind::range, "ys_prop3: dimension must lie in 1..3");
      require(s.depth >= 1 && s.depth <= 6, ErrorKind::range, "ys_prop3: depth must lie in 1..6");
      for (int v : s.S) require(v >= 1 && v <= 3 && v <= s.depth, ErrorKind::range, "ys_prop3: S must lie in 1..3");
      break;
    case FamilyId::ug:
      require(s.bits.size() <= 12, ErrorKind::range, "ug: at most 12 bits");
      for (int b : s.bits) require(b == 0 || b == 1, ErrorKind::validation, "ug: bits must be 0 or 1");
      break;
    case FamilyId::ys_td:
    case FamilyId::discrete: require_subset(s.S, 1, 6, family_name(s.id).data()); break;
    case FamilyId::as_primes:
      require(!s.S.empty(), ErrorKind::range, "as_primes: S must be nonempty");
      for (int p : s.S) {
        require(is_prime(p), ErrorKind::validation, "as_primes: " + std::to_string(p) + " is not prime");
        require(p <= 13, ErrorKind::range, "as_primes: primes must be among the first six");
      }
      require(s.depth >= 1 && s.depth <= 8, ErrorKind::range, "as_primes: depth must lie in 1..8");
      break;
    case FamilyId::xu:
      require(s.u >= 2, ErrorKind::range, "xu: u must be at least 2");
      require(s.depth >= 1 && s.depth <= 12, ErrorKind::range, "xu: depth must lie in 1..12");
      break;
  }
}

Built build(const FamilySpec& s) {
  validate_spec(s);
  switch (s.id) {
    case FamilyId::kn: return build_Kn(s.n);
    case FamilyId::xs: return build_XS(s.S);
    case FamilyId::xs_cubes: return lift_cubes(build_XS(s.S), s.n, s.depth);
    case FamilyId::frames_zs: return build_frames(s.S, false);
    case FamilyId::frame: {
      Frames f;
      f.base = Box{{Rat(-1), Rat(-1)}, Rat(1), false};
      f.ms = {s.n};
      f.frames = {build_frame(s.n, false)};
      return f;
    }
    case FamilyId::ys_prop3: return build_YS_prop3(s.S, s.n, s.depth);
    case FamilyId::ug: return build_Ug(s.bits);
    case FamilyId::ys_td: return build_YS_td(s.S);
    case FamilyId::discrete: return discrete_approximant(build_YS_td(s.S));
    case FamilyId::as_primes: return build_AS(s.S, s.depth);
    case FamilyId::xu: return build_Xu(s.u, s.depth);
  }
  fail(ErrorKind::usage, "unknown family");
}

}  // namespace scatterlab
