#include "scatterlab/term.hpp"

#include "scatterlab/error.hpp"

#include <tuple>

namespace scatterlab {

namespace {

const std::shared_ptr<const TermNode>& empty_node() {
  static const auto node = std::make_shared<const TermNode>(TermNode{terms::Empty{}});
  return node;
}

template <class T>
Term make(T value) {
  return Term(std::make_shared<const TermNode>(TermNode{std::move(value)}));
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::validation, what);
}

int cmp_rat(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }
int cmp_bool(bool a, bool b) { return static_cast<int>(a) - static_cast<int>(b); }

template <class... Ints>
int first_nonzero(Ints... c) {
  int out = 0;
  ((out == 0 ? (out = c, 0) : 0), ...);
  return out;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::empty: return "empty";
    case Kind::point: return "point";
    case Kind::interval: return "interval";
    case Kind::ladder: return "ladder";
    case Kind::cantor: return "cantor";
    case Kind::fwrap: return "fwrap";
    case Kind::affine: return "affine";
    case Kind::union_: return "union";
    case Kind::thicken: return "thicken";
    case Kind::mirror: return "mirror";
    case Kind::endpoints: return "endpoints";
    case Kind::geo: return "geo";
    case Kind::cantor_orbit: return "cantor_orbit";
  }
  return "?";
}

Term::Term() : node_(empty_node()) {}

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || a.node_->v == b.node_->v;
}

Term empty() { return Term(); }

Term point(Rat at) { return make(terms::Point{std::move(at)}); }

Term interval(Rat lo, Rat hi, bool open) {
  require(lo < hi, "interval requires lo < hi");
  return make(terms::Interval{std::move(lo), std::move(hi), open});
}

Term ladder(Rat target, Rat offset0, Rat ratio, bool include_target) {
  require(offset0 > Rat(0), "ladder offset0 must be positive");
  require(Rat(0) < ratio && ratio < Rat(1), "ladder ratio must lie in (0,1)");
  return make(terms::Ladder{std::move(target), std::move(offset0), std::move(ratio), include_target});
}

Term cantor(Rat lo, Rat hi) {
  require(lo < hi, "cantor requires lo < hi");
  return make(terms::Cantor{std::move(lo), std::move(hi)});
}

Term fwrap(Term inner, bool include_top) { return make(terms::FWrap{std::move(inner), include_top}); }

Term affine(Rat scale, Rat shift, Term inner) {
  require(scale != Rat(0), "affine scale must be nonzero");
  return make(terms::Affine{std::move(scale), std::move(shift), std::move(inner)});
}

Term union_of(std::vector<Term> parts) { return make(terms::Union{std::move(parts)}); }

Term thicken(Term inner, Rat cap) {
  require(cap > Rat(0), "thicken cap must be positive");
  return make(terms::Thicken{std::move(inner), std::move(cap)});
}

Term mirror(Rat center, Term inner) { return make(terms::Mirror{std::move(center), std::move(inner)}); }

Term endpoints(Term of) { return make(terms::EndpointSet{std::move(of)}); }

Term geo(Rat center, Rat ratio, Term seed, bool include_center) {
  require(Rat(0) < ratio && ratio < Rat(1), "geo ratio must lie in (0,1)");
  return make(terms::Geo{std::move(center), std::move(ratio), std::move(seed), include_center});
}

Term cantor_orbit(Rat lo, Rat hi, Term seed) {
  require(lo < hi, "cantor_orbit requires lo < hi");
  return make(terms::CantorOrbit{std::move(lo), std::move(hi), std::move(seed)});
}

int compare(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  using namespace terms;
  switch (a.kind()) {
    case Kind::empty: return 0;
    case Kind::point: return cmp_rat(a.as<Point>().at, b.as<Point>().at);
    case Kind::interval: {
      auto& x = a.as<Interval>();
      auto& y = b.as<Interval>();
      return first_nonzero(cmp_rat(x.lo, y.lo), cmp_rat(x.hi, y.hi), cmp_bool(x.open, y.open));
    }
    case Kind::ladder: {
      auto& x = a.as<Ladder>();
      auto& y = b.as<Ladder>();
      return first_nonzero(cmp_rat(x.target, y.target), cmp_rat(x.offset0, y.offset0),
                           cmp_rat(x.ratio, y.ratio), cmp_bool(x.include_target, y.include_target));
    }
    case Kind::cantor: {
      auto& x = a.as<Cantor>();
      auto& y = b.as<Cantor>();
      return first_nonzero(cmp_rat(x.lo, y.lo), cmp_rat(x.hi, y.hi));
    }
    case Kind::fwrap: {
      auto& x = a.as<FWrap>();
      auto& y = b.as<FWrap>();
      return first_nonzero(cmp_bool(x.include_top, y.include_top), compare(x.inner, y.inner));
    }
    case Kind::affine: {
      auto& x = a.as<Affine>();
      auto& y = b.as<Affine>();
      return first_nonzero(cmp_rat(x.scale, y.scale), cmp_rat(x.shift, y.shift), compare(x.inner, y.inner));
    }
    case Kind::union_: {
      auto& x = a.as<Union>().parts;
      auto& y = b.as<Union>().parts;
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (int c = compare(x[i], y[i])) return c;
      return 0;
    }
    case Kind::thicken: {
      auto& x = a.as<Thicken>();
      auto& y = b.as<Thicken>();
      return first_nonzero(cmp_rat(x.cap, y.cap), compare(x.inner, y.inner));
    }
    case Kind::mirror: {
      auto& x = a.as<Mirror>();
      auto& y = b.as<Mirror>();
      return first_nonzero(cmp_rat(x.center, y.center), compare(x.inner, y.inner));
    }
    case Kind::endpoints: return compare(a.as<EndpointSet>().of, b.as<EndpointSet>().of);
    case Kind::geo: {
      auto& x = a.as<Geo>();
      auto& y = b.as<Geo>();
      return first_nonzero(cmp_rat(x.center, y.center), cmp_rat(x.ratio, y.ratio),
                           cmp_bool(x.include_center, y.include_center), compare(x.seed, y.seed));
    }
    case Kind::cantor_orbit: {
      auto& x = a.as<CantorOrbit>();
      auto& y = b.as<CantorOrbit>();
      return first_nonzero(cmp_rat(x.lo, y.lo), cmp_rat(x.hi, y.hi), compare(x.seed, y.seed));
    }
  }
  return 0;
}

}  // namespace scatterlab
