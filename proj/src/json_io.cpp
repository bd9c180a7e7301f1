#include "scatterlab/json_io.hpp"

#include "scatterlab/error.hpp"

namespace scatterlab {

using namespace terms;

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  fail(ErrorKind::parse, "expected a rational string, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

Rat rat_field(const Json& j, const char* key) { return rat_from_json(field(j, key)); }

bool bool_field(const Json& j, const char* key, std::optional<bool> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(ErrorKind::parse, std::string("missing field '") + key + "'");
  }
  if (!j.at(key).is_boolean()) fail(ErrorKind::parse, std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

std::vector<Rat> rats(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::parse, "expected an array of rationals");
  std::vector<Rat> out;
  for (auto& v : j) out.push_back(rat_from_json(v));
  return out;
}

Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (auto& r : v) a.push_back(to_json(r));
  return a;
}

}  // namespace

Json to_json(const Term& t) {
  Json j;
  j["kind"] = t.kind() == Kind::union_ ? "union" : std::string(kind_name(t.kind()));
  switch (t.kind()) {
    case Kind::empty: break;
    case Kind::point: j["at"] = to_json(t.as<Point>().at); break;
    case Kind::interval: {
      auto& i = t.as<Interval>();
      j["lo"] = to_json(i.lo);
      j["hi"] = to_json(i.hi);
      if (i.open) j["open"] = true;
      break;
    }
    case Kind::ladder: {
      auto& l = t.as<Ladder>();
      j["target"] = to_json(l.target);
      j["offset0"] = to_json(l.offset0);
      j["ratio"] = to_json(l.ratio);
      j["include_target"] = l.include_target;
      break;
    }
    case Kind::cantor: {
      auto& c = t.as<Cantor>();
      j["lo"] = to_json(c.lo);
      j["hi"] = to_json(c.hi);
      break;
    }
    case Kind::fwrap: {
      auto& f = t.as<FWrap>();
      j["inner"] = to_json(f.inner);
      j["include_top"] = f.include_top;
      break;
    }
    case Kind::affine: {
      auto& a = t.as<Affine>();
      j["scale"] = to_json(a.scale);
      j["shift"] = to_json(a.shift);
      j["inner"] = to_json(a.inner);
      break;
    }
    case Kind::union_: {
      Json parts = Json::array();
      for (auto& p : t.as<Union>().parts) parts.push_back(to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
    case Kind::thicken: {
      auto& th = t.as<Thicken>();
      j["inner"] = to_json(th.inner);
      j["cap"] = to_json(th.cap);
      break;
    }
    case Kind::mirror: {
      auto& m = t.as<Mirror>();
      j["center"] = to_json(m.center);
      j["inner"] = to_json(m.inner);
      break;
    }
    case Kind::endpoints: j["of"] = to_json(t.as<EndpointSet>().of); break;
    case Kind::geo: {
      auto& g = t.as<Geo>();
      j["center"] = to_json(g.center);
      j["ratio"] = to_json(g.ratio);
      j["seed"] = to_json(g.seed);
      j["include_center"] = g.include_center;
      break;
    }
    case Kind::cantor_orbit: {
      auto& o = t.as<CantorOrbit>();
      j["lo"] = to_json(o.lo);
      j["hi"] = to_json(o.hi);
      j["seed"] = to_json(o.seed);
      break;
    }
  }
  return j;
}

Term term_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "a term must be a JSON object");
  const Json& k = field(j, "kind");
  if (!k.is_string()) fail(ErrorKind::parse, "field 'kind' must be a string");
  std::string kind = k.get<std::string>();
  if (kind == "empty") return empty();
  if (kind == "point") return point(rat_field(j, "at"));
  if (kind == "interval") return interval(rat_field(j, "lo"), rat_field(j, "hi"), bool_field(j, "open", false));
  if (kind == "ladder")
    return ladder(rat_field(j, "target"), rat_field(j, "offset0"), rat_field(j, "ratio"),
                  bool_field(j, "include_target"));
  if (kind == "cantor") return cantor(rat_field(j, "lo"), rat_field(j, "hi"));
  if (kind == "fwrap") return fwrap(term_from_json(field(j, "inner")), bool_field(j, "include_top"));
  if (kind == "affine") return affine(rat_field(j, "scale"), rat_field(j, "shift"), term_from_json(field(j, "inner")));
  if (kind == "union") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) fail(ErrorKind::parse, "field 'parts' must be an array");
    std::vector<Term> out;
    for (auto& p : parts) out.push_back(term_from_json(p));
    return union_of(std::move(out));
  }
  if (kind == "thicken") return thicken(term_from_json(field(j, "inner")), rat_field(j, "cap"));
  if (kind == "mirror") return mirror(rat_field(j, "center"), term_from_json(field(j, "inner")));
  if (kind == "endpoints") return endpoints(term_from_json(field(j, "of")));
  if (kind == "geo")
    return geo(rat_field(j, "center"), rat_field(j, "ratio"), term_from_json(field(j, "seed")),
               bool_field(j, "include_center"));
  if (kind == "cantor_orbit")
    return cantor_orbit(rat_field(j, "lo"), rat_field(j, "hi"), term_from_json(field(j, "seed")));
  fail(ErrorKind::parse, "unknown term kind '" + kind + "'");
}

Json to_json(const Box& b) {
  return Json{{"corner", rats_json(b.corner)}, {"edge", to_json(b.edge)}, {"open", b.open}};
}

Json to_json(const BoxUnion& u) {
  Json boxes = Json::array();
  for (auto& b : u.boxes) boxes.push_back(to_json(b));
  return Json{{"kind", "box_union"}, {"dimension", u.dimension}, {"boxes", std::move(boxes)}};
}

namespace {
Box box_from_json(const Json& j) {
  return Box{rats(field(j, "corner")), rat_field(j, "edge"), bool_field(j, "open", false)};
}
}  // namespace

BoxUnion box_union_from_json(const Json& j) {
  BoxUnion u;
  if (!field(j, "dimension").is_number_integer()) fail(ErrorKind::parse, "field 'dimension' must be an integer");
  u.dimension = field(j, "dimension").get<int>();
  for (auto& b : field(j, "boxes")) u.boxes.push_back(box_from_json(b));
  return u;
}

Json to_json(const FrameRegion& f) {
  Json holes = Json::array();
  for (auto& h : f.holes) holes.push_back(to_json(h));
  return Json{{"kind", "frame"}, {"outer", to_json(f.outer)}, {"holes", std::move(holes)}};
}

FrameRegion frame_from_json(const Json& j) {
  FrameRegion f;
  f.outer = box_from_json(field(j, "outer"));
  for (auto& h : field(j, "holes")) f.holes.push_back(box_from_json(h));
  return f;
}

Json to_json(const Frames& f) {
  Json frames = Json::array();
  for (size_t i = 0; i < f.frames.size(); ++i) {
    Json fr = to_json(f.frames[i]);
    fr["m"] = f.ms[i];
    frames.push_back(std::move(fr));
  }
  return Json{{"kind", "frames"}, {"base", to_json(f.base)}, {"frames", std::move(frames)}};
}

Frames frames_from_json(const Json& j) {
  Frames f;
  f.base = box_from_json(field(j, "base"));
  for (auto& fr : field(j, "frames")) {
    if (!field(fr, "m").is_number_integer()) fail(ErrorKind::parse, "field 'm' must be an integer");
    f.ms.push_back(fr["m"].get<int>());
    f.frames.push_back(frame_from_json(fr));
  }
  return f;
}

CubeFamily cube_family_from_json(const Json& j) {
  CubeFamily f;
  if (!field(j, "dimension").is_number_integer()) fail(ErrorKind::parse, "field 'dimension' must be an integer");
  f.dimension = j["dimension"].get<int>();
  f.scaffold = term_from_json(field(j, "scaffold"));
  for (auto& m : field(j, "members"))
    f.members.push_back(LabeledCube{box_from_json(field(m, "box")), rat_field(m, "lo"), rat_field(m, "hi")});
  return f;
}

Built built_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind") && j["kind"].is_string()) {
    auto kind = j["kind"].get<std::string>();
    if (kind == "box_union") return box_union_from_json(j);
    if (kind == "frames") return frames_from_json(j);
    if (kind == "cube_family") return cube_family_from_json(j);
  }
  return term_from_json(j);
}

Json to_json(const CubeFamily& f) {
  Json members = Json::array();
  for (auto& m : f.members)
    members.push_back(Json{{"box", to_json(m.box)}, {"lo", to_json(m.lo)}, {"hi", to_json(m.hi)}});
  return Json{{"kind", "cube_family"},
              {"dimension", f.dimension},
              {"scaffold", to_json(f.scaffold)},
              {"members", std::move(members)}};
}

Json to_json(const Built& b) {
  return std::visit([](const auto& v) { return to_json(v); }, b);
}

Json to_json(const CBProfile& p) {
  Json its = Json::array();
  for (auto& t : p.iterates) its.push_back(to_json(t));
  Json j{{"iterates", std::move(its)}};
  if (p.vanishing_index)
    j["vanishing_index"] = *p.vanishing_index;
  else if (p.does_not_vanish)
    j["vanishing_index"] = "does-not-vanish";
  else
    j["vanishing_index"] = nullptr;
  return j;
}

Json to_json(const ComponentList& c) {
  Json comps = Json::array();
  for (auto& x : c.components) {
    Json e{{"kind", x.shape == Component::Shape::point ? "point" : "interval"},
           {"lo", to_json(x.lo)},
           {"hi", to_json(x.hi)}};
    if (x.open) e["open"] = true;
    if (x.tag) e["tag"] = *x.tag;
    comps.push_back(std::move(e));
  }
  Json windows = Json::array();
  for (auto& w : c.windows)
    windows.push_back(Json{{"lo", to_json(w.lo)}, {"hi", to_json(w.hi)}, {"limit", to_json(w.limit)}});
  Json j{{"components", std::move(comps)}, {"windows", std::move(windows)}, {"depth", c.depth}};
  j["complete_below"] = c.complete_below ? to_json(*c.complete_below) : Json(nullptr);
  return j;
}

Json to_json(const Approximation& a) {
  Json ivs = Json::array();
  for (auto& i : a.intervals) {
    Json e{{"lo", to_json(i.lo)}, {"hi", to_json(i.hi)}};
    if (i.open) e["open"] = true;
    ivs.push_back(std::move(e));
  }
  return Json{{"depth", a.depth}, {"points", rats_json(a.points)}, {"intervals", std::move(ivs)},
              {"tolerance", to_json(a.tolerance)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace scatterlab
