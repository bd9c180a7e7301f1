#include <doctest.h>

#include "scatterlab/acceptance.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/json_io.hpp"
#include "scatterlab/render.hpp"
#include "scatterlab/semantics.hpp"

using namespace scatterlab;

TEST_CASE("catalog round trip") {
  for (auto& s : catalog_specs()) {
    CAPTURE(s.label);
    Built b = build(s);
    std::string text = dump(to_json(b));
    CHECK(text.back() == '\n');
    Built back = built_from_json(Json::parse(text));
    CHECK(dump(to_json(back)) == text);
    if (auto t = std::get_if<Term>(&b)) CHECK(probe_equal(*t, std::get<Term>(back)));
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(built_from_json(Json::parse(R"({"kind": "interval", "lo": "1/0", "hi": "1"})")), Error);
  CHECK_THROWS_AS(built_from_json(Json::parse(R"({"kind": "box_union", "dimension": "2", "boxes": []})")), Error);
  CHECK_THROWS_AS(built_from_json(Json::parse(R"({"kind": "whatever"})")), Error);
}

TEST_CASE("svg output") {
  auto svg = render_svg(thicken(build_Kn(1), 1), 4);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("…") != std::string::npos);
  CHECK(svg == render_svg(thicken(build_Kn(1), 1), 4));

  FamilySpec f;
  f.id = FamilyId::frame;
  f.n = 3;
  auto frame = render_svg(build(f), 1);
  // base square, outer square, three holes
  CHECK(std::count(frame.begin(), frame.end(), '\n') == 1 + 5 + 1);

  f.id = FamilyId::ys_prop3;
  f.S = {1};
  f.n = 3;
  CHECK_THROWS_AS(render_svg(build(f), 1), Error);
  CHECK(render_svg(Term{}, 3).find("empty") != std::string::npos);
}
