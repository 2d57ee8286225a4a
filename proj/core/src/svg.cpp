#include "depthcore/svg.hpp"

#include <sstream>

namespace dd::svg {

namespace {

struct Box {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
};

Box bounds(const std::vector<Pt>& pts, const std::vector<Layer>& layers) {
  Box b;
  bool first = true;
  auto eat = [&](const Pt& p) {
    double x = p.x.to_double(), y = p.y.to_double();
    if (first) {
      b = Box{x, y, x, y};
      first = false;
      return;
    }
    b.x0 = std::min(b.x0, x);
    b.x1 = std::max(b.x1, x);
    b.y0 = std::min(b.y0, y);
    b.y1 = std::max(b.y1, y);
  };
  for (const Pt& p : pts) eat(p);
  for (const Layer& l : layers)
    for (const Polygon& poly : l.contours)
      for (const Pt& v : poly.verts) eat(v);
  if (first) b = Box{0, 0, 1, 1};
  if (b.x1 - b.x0 < 1e-9) b.x1 = b.x0 + 1;
  if (b.y1 - b.y0 < 1e-9) b.y1 = b.y0 + 1;
  return b;
}

}  // namespace

std::string render(const std::vector<Pt>& points, const std::vector<Layer>& layers,
                   int size_px) {
  Box b = bounds(points, layers);
  double pad = 0.05 * std::max(b.x1 - b.x0, b.y1 - b.y0);
  b.x0 -= pad;
  b.x1 += pad;
  b.y0 -= pad;
  b.y1 += pad;
  double sx = size_px / (b.x1 - b.x0);
  double sy = size_px / (b.y1 - b.y0);
  double s = std::min(sx, sy);
  auto X = [&](const Pt& p) { return (p.x.to_double() - b.x0) * s; };
  auto Y = [&](const Pt& p) { return (b.y1 - p.y.to_double()) * s; };  // y grows upward

  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
    << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
  for (const Layer& l : layers) {
    for (const Polygon& poly : l.contours) {
      if (poly.kind == Polygon::Kind::Empty) continue;
      if (poly.kind == Polygon::Kind::Point) {
        o << "  <circle cx=\"" << X(poly.verts[0]) << "\" cy=\"" << Y(poly.verts[0])
          << "\" r=\"3\" fill=\"" << l.stroke << "\"/>\n";
        continue;
      }
      const char* tag = poly.kind == Polygon::Kind::Segment ? "polyline" : "polygon";
      o << "  <" << tag << " points=\"";
      for (std::size_t i = 0; i < poly.verts.size(); ++i) {
        if (i) o << ' ';
        o << X(poly.verts[i]) << ',' << Y(poly.verts[i]);
      }
      o << "\" fill=\"none\" stroke=\"" << l.stroke << "\" stroke-width=\"1.5\"";
      if (l.dashed) o << " stroke-dasharray=\"6 4\"";
      o << "/>\n";
    }
  }
  for (const Pt& p : points) {
    o << "  <circle cx=\"" << X(p) << "\" cy=\"" << Y(p)
      << "\" r=\"2.2\" fill=\"#333\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace dd::svg
