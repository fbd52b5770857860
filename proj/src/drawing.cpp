#include "octi/drawing.hpp"

#include <algorithm>
#include <string>

namespace octi {

namespace {

long long cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point p, Point a, Point b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed segments [a,b] and [c,d] intersect?
bool segments_intersect(Point a, Point b, Point c, Point d) {
  long long d1 = cross(c, d, a);
  long long d2 = cross(c, d, b);
  long long d3 = cross(a, b, c);
  long long d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

}  // namespace

long long GridDrawing::width() const {
  if (coords.empty()) return 0;
  auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                      [](Point a, Point b) { return a.x < b.x; });
  return hi->x - lo->x;
}

long long GridDrawing::height() const {
  if (coords.empty()) return 0;
  auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                      [](Point a, Point b) { return a.y < b.y; });
  return hi->y - lo->y;
}

long long bbox_area(const GridDrawing& drw) {
  if (drw.coords.empty()) fail("EmptyDrawing", "bbox_area of empty drawing");
  return drw.width() * drw.height();
}

GridDrawing normalized(const GridDrawing& drw) {
  GridDrawing out = drw;
  if (out.coords.empty()) return out;
  long long mx = out.coords.front().x, my = out.coords.front().y;
  for (const auto& p : out.coords) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  for (auto& p : out.coords) {
    p.x -= mx;
    p.y -= my;
  }
  return out;
}

ValidationReport validate_drawing(const OctiRep& rep, const GridDrawing& drw) {
  ValidationReport report;
  if (static_cast<int>(drw.coords.size()) != rep.vertex_count) {
    report.push_back({"CoordCountMismatch",
                      "drawing has " + std::to_string(drw.coords.size()) + " coordinates for " +
                          std::to_string(rep.vertex_count) + " vertices",
                      -1});
    return report;
  }

  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    Point a = drw.coords[static_cast<std::size_t>(rep.edge_u(e))];
    Point b = drw.coords[static_cast<std::size_t>(rep.edge_v(e))];
    Direction dir = rep.edge_dir(e);
    long long dx = b.x - a.x, dy = b.y - a.y;
    long long ext = std::max(std::abs(dx), std::abs(dy));
    bool ok = ext > 0 && dx == dir.dx() * ext && dy == dir.dy() * ext;
    if (!ok)
      report.push_back({"DirectionMismatch",
                        "edge " + std::to_string(e) + " from (" + std::to_string(a.x) + "," +
                            std::to_string(a.y) + ") to (" + std::to_string(b.x) + "," + std::to_string(b.y) +
                            ") is not a positive step in direction " + std::to_string(dir.value),
                        e});
  }

  for (VertexId v = 0; v < rep.vertex_count; ++v) {
    for (VertexId w = v + 1; w < rep.vertex_count; ++w) {
      if (drw.coords[static_cast<std::size_t>(v)] == drw.coords[static_cast<std::size_t>(w)]) {
        report.push_back({"NotSimple",
                          "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide", v});
      }
    }
  }

  // Segment pairs may touch only at shared endpoints.
  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    Point a = drw.coords[static_cast<std::size_t>(rep.edge_u(e))];
    Point b = drw.coords[static_cast<std::size_t>(rep.edge_v(e))];
    for (EdgeId g = e + 1; g < rep.edge_count(); ++g) {
      Point c = drw.coords[static_cast<std::size_t>(rep.edge_u(g))];
      Point d = drw.coords[static_cast<std::size_t>(rep.edge_v(g))];
      if (!segments_intersect(a, b, c, d)) continue;
      bool share_a = (a == c || a == d);
      bool share_b = (b == c || b == d);
      if (share_a && share_b) {
        report.push_back({"NotSimple", "edges " + std::to_string(e) + " and " + std::to_string(g) + " coincide", e});
        continue;
      }
      if (share_a || share_b) {
        // Straight segments from a shared endpoint overlap iff they leave it
        // along the same ray.
        Point s = share_a ? a : b;
        Point p = share_a ? b : a;
        Point q = (c == s) ? d : c;
        if (cross(s, p, q) == 0 && (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0)
          report.push_back({"NotSimple",
                            "edges " + std::to_string(e) + " and " + std::to_string(g) + " overlap", e});
        continue;
      }
      report.push_back({"NotSimple",
                        "edges " + std::to_string(e) + " and " + std::to_string(g) + " intersect", e});
    }
  }
  return report;
}

}  // namespace octi
