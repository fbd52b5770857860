#include "octi/svg.hpp"

#include <sstream>

namespace octi {

std::string render_svg(const OctiRep& rep, const GridDrawing& drw, long long scale) {
  if (scale < 1) fail("PreconditionViolated", "scale must be positive");
  if (!validate_drawing(rep, drw).empty()) fail("InvalidDrawing", "drawing does not realize the representation");

  GridDrawing norm = normalized(drw);
  long long w = norm.width() + 2, h = norm.height() + 2;
  long long hi = norm.height();
  auto sx = [&](long long x) { return (x + 1) * scale; };
  auto sy = [&](long long y) { return (hi - y + 1) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
      << h * scale << "\" viewBox=\"0 0 " << w * scale << " " << h * scale << "\">\n";
  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    Point a = norm.coords[static_cast<std::size_t>(rep.edge_u(e))];
    Point b = norm.coords[static_cast<std::size_t>(rep.edge_v(e))];
    out << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
        << "\" y2=\"" << sy(b.y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t v = 0; v < norm.coords.size(); ++v) {
    Point p = norm.coords[v];
    out << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"4\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace octi
