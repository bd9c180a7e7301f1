#include "scatterlab/render.hpp"

#include "scatterlab/error.hpp"
#include "scatterlab/semantics.hpp"

#include <cstdio>
#include <sstream>

namespace scatterlab {

namespace {

constexpr double kWidth = 1000, kPad = 20;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Scale {
  Rat lo, span;
  double operator()(const Rat& x) const { return kPad + ((x - lo) / span).to_double() * (kWidth - 2 * kPad); }
};

Scale fit(const Rat& lo, const Rat& hi) { return {lo, hi > lo ? hi - lo : Rat(1)}; }

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
         num(w) + " " + num(h) + "\">\n";
}

std::string line_svg(const Term& t, int depth) {
  std::ostringstream out;
  out << header(kWidth, 120);
  auto h = hull(t);
  if (!h) {
    out << "<text x=\"20\" y=\"60\">empty</text>\n</svg>\n";
    return out.str();
  }
  Scale sx = fit(h->lo, h->hi);
  auto a = enumerate(t, depth);
  out << "<line x1=\"" << num(kPad) << "\" y1=\"60\" x2=\"" << num(kWidth - kPad) << "\" y2=\"60\" stroke=\"#ccc\"/>\n";
  for (auto& i : a.intervals) {
    double x0 = sx(i.lo), x1 = sx(i.hi);
    out << "<rect x=\"" << num(x0) << "\" y=\"52\" width=\"" << num(x1 - x0) << "\" height=\"16\" fill=\"#333\""
        << (i.open ? " fill-opacity=\"0.5\"" : "") << "/>\n";
  }
  for (auto& p : a.points) {
    double x = sx(p);
    out << "<line x1=\"" << num(x) << "\" y1=\"48\" x2=\"" << num(x) << "\" y2=\"72\" stroke=\"#000\"/>\n";
  }
  for (auto& w : a.windows) {
    double x = (sx(w.lo) + sx(w.hi)) / 2;
    out << "<text x=\"" << num(x) << "\" y=\"40\" font-size=\"10\" text-anchor=\"middle\">…</text>\n";
  }
  out << "<text x=\"" << num(kPad) << "\" y=\"105\" font-size=\"12\">[" << h->lo.str() << ", " << h->hi.str()
      << "] depth " << depth << "</text>\n</svg>\n";
  return out.str();
}

struct Plane {
  Rat x0, y0, span;
  double x(const Rat& v) const { return kPad + ((v - x0) / span).to_double() * (kWidth - 2 * kPad); }
  // SVG y grows downwards.
  double y(const Rat& v) const { return kWidth - kPad - ((v - y0) / span).to_double() * (kWidth - 2 * kPad); }
};

Plane fit_plane(const std::vector<const Box*>& boxes) {
  Rat x0 = boxes.front()->corner[0], y0 = boxes.front()->corner[1];
  Rat x1 = x0 + boxes.front()->edge, y1 = y0 + boxes.front()->edge;
  for (auto* b : boxes) {
    x0 = min(x0, b->corner[0]);
    y0 = min(y0, b->corner[1]);
    x1 = max(x1, b->corner[0] + b->edge);
    y1 = max(y1, b->corner[1] + b->edge);
  }
  Rat span = max(x1 - x0, y1 - y0);
  return {x0, y0, span > 0 ? span : Rat(1)};
}

void rect(std::ostringstream& out, const Plane& p, const Box& b, const char* fill) {
  double x = p.x(b.corner[0]), y = p.y(b.corner[1] + b.edge);
  double s = p.x(b.corner[0] + b.edge) - x;
  out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(s) << "\" height=\"" << num(s)
      << "\" fill=\"" << fill << "\" stroke=\"#000\"" << (b.open ? " stroke-dasharray=\"4 2\"" : "") << "/>\n";
}

std::string plane_svg(const std::vector<const Box*>& filled, const std::vector<const Box*>& holes) {
  std::ostringstream out;
  out << header(kWidth, kWidth);
  if (filled.empty()) {
    out << "<text x=\"20\" y=\"60\">empty</text>\n</svg>\n";
    return out.str();
  }
  for (auto* b : filled)
    if (b->corner.size() != 2) fail(ErrorKind::not_supported, "only planar boxes can be drawn");
  Plane p = fit_plane(filled);
  for (auto* b : filled) rect(out, p, *b, "#888");
  for (auto* b : holes) rect(out, p, *b, "#fff");
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Built& value, int depth) {
  if (depth < 1) fail(ErrorKind::range, "depth must be positive");
  std::vector<const Box*> filled, holes;
  if (auto t = std::get_if<Term>(&value)) return line_svg(*t, depth);
  if (auto u = std::get_if<BoxUnion>(&value)) {
    if (u->dimension != 2) fail(ErrorKind::not_supported, "only planar box unions can be drawn");
    for (auto& b : u->boxes) filled.push_back(&b);
  } else if (auto f = std::get_if<CubeFamily>(&value)) {
    if (f->dimension != 2) fail(ErrorKind::not_supported, "only planar cube families can be drawn");
    for (auto& m : f->members) filled.push_back(&m.box);
  } else {
    auto& fr = std::get<Frames>(value);
    filled.push_back(&fr.base);
    for (auto& r : fr.frames) {
      filled.push_back(&r.outer);
      for (auto& h : r.holes) holes.push_back(&h);
    }
  }
  return plane_svg(filled, holes);
}

}  // namespace scatterlab
