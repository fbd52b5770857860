#include "octi/oracle.hpp"

#include <algorithm>
#include <queue>

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

bool proper_or_touching_intersection(Point a, Point b, Point c, Point d) {
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

// Segments conflict unless they touch only at a shared endpoint.
bool segments_conflict(Point a, Point b, Point c, Point d) {
  bool share_a = (a == c || a == d);
  bool share_b = (b == c || b == d);
  if (share_a && share_b) return true;
  if (share_a || share_b) {
    Point s = share_a ? a : b;
    Point p = share_a ? b : a;
    Point q = (c == s) ? d : c;
    return cross(s, p, q) == 0 && (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0;
  }
  return proper_or_touching_intersection(a, b, c, d);
}

struct Search {
  const OctiRep& rep;
  long long width, height;
  const OracleOptions& opts;
  OracleStats* stats;
  const std::function<bool(const GridDrawing&)>& visit;

  std::vector<VertexId> order;       // BFS order from vertex 0
  std::vector<DartId> parent_dart;   // dart placing order[i] from an earlier vertex
  std::vector<Point> pos;
  std::vector<char> placed;
  long long nodes = 0;
  bool stopped = false;

  Search(const OctiRep& r, long long w, long long h, const OracleOptions& o, OracleStats* st,
         const std::function<bool(const GridDrawing&)>& v)
      : rep(r), width(w), height(h), opts(o), stats(st), visit(v) {
    pos.assign(static_cast<std::size_t>(rep.vertex_count), Point{});
    placed.assign(static_cast<std::size_t>(rep.vertex_count), 0);
    std::vector<char> seen(static_cast<std::size_t>(rep.vertex_count), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    order.push_back(0);
    parent_dart.push_back(-1);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) {
        VertexId w2 = rep.dart_to(d);
        if (!seen[static_cast<std::size_t>(w2)]) {
          seen[static_cast<std::size_t>(w2)] = 1;
          order.push_back(w2);
          parent_dart.push_back(d);
          q.push(w2);
        }
      }
    }
    if (static_cast<int>(order.size()) != rep.vertex_count)
      fail("PreconditionViolated", "oracle needs a connected representation");
  }

  void count_node() {
    ++nodes;
    if (stats) stats->nodes = nodes;
    if (nodes > opts.node_budget) fail("BudgetExceeded", "oracle exceeded its node budget");
  }

  bool span_ok() const {
    long long minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (VertexId v = 0; v < rep.vertex_count; ++v) {
      if (!placed[static_cast<std::size_t>(v)]) continue;
      Point p = pos[static_cast<std::size_t>(v)];
      if (first) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        first = false;
      } else {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
      }
    }
    return maxx - minx <= width && maxy - miny <= height;
  }

  // New vertex w at pw: check against placed vertices and fully placed edges.
  bool placement_ok(VertexId w, Point pw) const {
    for (VertexId v = 0; v < rep.vertex_count; ++v) {
      if (placed[static_cast<std::size_t>(v)] && pos[static_cast<std::size_t>(v)] == pw) return false;
    }
    // Edges fully placed after adding w must not conflict with each other or
    // with previously placed edges; the incremental check only needs the new
    // edges at w.
    for (DartId d : rep.rotation[static_cast<std::size_t>(w)]) {
      VertexId u = rep.dart_to(d);
      if (!placed[static_cast<std::size_t>(u)]) continue;
      Point pu = pos[static_cast<std::size_t>(u)];
      // Direction consistency for the new edge.
      Direction dwu = rep.dart_dir(d);
      long long dx = pu.x - pw.x, dy = pu.y - pw.y;
      long long ext = std::max(std::abs(dx), std::abs(dy));
      if (ext <= 0 || dx != dwu.dx() * ext || dy != dwu.dy() * ext) return false;
      // The new segment against all fully placed edges.
      for (EdgeId e = 0; e < rep.edge_count(); ++e) {
        if (e == dart_edge(d)) continue;
        VertexId a = rep.edge_u(e), b = rep.edge_v(e);
        if (!placed[static_cast<std::size_t>(a)] || !placed[static_cast<std::size_t>(b)]) continue;
        if (a == w || b == w) continue;  // handled when that dart is processed
        if (segments_conflict(pw, pu, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]))
          return false;
      }
      // Against edges incident to w already placed in this call's loop: the
      // shared-endpoint rule handles those via segments_conflict too.
      for (DartId d2 : rep.rotation[static_cast<std::size_t>(w)]) {
        if (d2 == d) continue;
        VertexId u2 = rep.dart_to(d2);
        if (!placed[static_cast<std::size_t>(u2)]) continue;
        if (segments_conflict(pw, pu, pw, pos[static_cast<std::size_t>(u2)])) return false;
      }
      // A placed vertex sitting in the interior of the new segment.
      for (VertexId v = 0; v < rep.vertex_count; ++v) {
        if (!placed[static_cast<std::size_t>(v)] || v == u || v == w) continue;
        if (on_segment(pos[static_cast<std::size_t>(v)], pw, pu)) return false;
      }
    }
    // w sitting in the interior of a fully placed edge.
    for (EdgeId e = 0; e < rep.edge_count(); ++e) {
      VertexId a = rep.edge_u(e), b = rep.edge_v(e);
      if (a == w || b == w) continue;
      if (!placed[static_cast<std::size_t>(a)] || !placed[static_cast<std::size_t>(b)]) continue;
      if (on_segment(pw, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)])) return false;
    }
    return true;
  }

  bool recurse(std::size_t idx) {
    if (stopped) return false;
    if (idx == order.size()) {
      GridDrawing drw;
      drw.coords = pos;
      if (!visit(normalized(drw))) {
        stopped = true;
        return false;
      }
      return true;
    }
    VertexId w = order[idx];
    DartId pd = parent_dart[idx];
    VertexId from = rep.dart_from(pd);
    Direction dir = rep.dart_dir(pd);
    Point base = pos[static_cast<std::size_t>(from)];
    long long max_ext = std::max(width, height);
    if (dir.diagonal()) max_ext = std::min(width, height);
    else if (dir.horizontal()) max_ext = width;
    else max_ext = height;
    for (long long k = 1; k <= max_ext; ++k) {
      Point pw{base.x + dir.dx() * k, base.y + dir.dy() * k};
      count_node();
      if (!placement_ok(w, pw)) continue;
      pos[static_cast<std::size_t>(w)] = pw;
      placed[static_cast<std::size_t>(w)] = 1;
      if (span_ok()) recurse(idx + 1);
      placed[static_cast<std::size_t>(w)] = 0;
      if (stopped) return false;
    }
    return true;
  }

  void run() {
    pos[static_cast<std::size_t>(order[0])] = Point{0, 0};
    placed[static_cast<std::size_t>(order[0])] = 1;
    count_node();
    recurse(1);
  }
};

}  // namespace

void oracle_enumerate(const OctiRep& rep, long long width, long long height,
                      const std::function<bool(const GridDrawing&)>& visit,
                      const OracleOptions& opts, OracleStats* stats) {
  if (width < 0 || height < 0) fail("PreconditionViolated", "negative grid");
  Search s(rep, width, height, opts, stats, visit);
  s.run();
}

std::optional<GridDrawing> oracle_realize(const OctiRep& rep, long long width, long long height,
                                          const OracleOptions& opts, OracleStats* stats) {
  std::optional<GridDrawing> found;
  oracle_enumerate(
      rep, width, height,
      [&](const GridDrawing& drw) {
        found = drw;
        return false;
      },
      opts, stats);
  return found;
}

std::optional<MinAreaResult> oracle_min_area(const OctiRep& rep, long long max_side,
                                             const OracleOptions& opts) {
  // Candidate boxes by increasing area; the first feasible box is tight,
  // since any smaller-area drawing inside it would fit an earlier box.
  std::vector<std::pair<long long, long long>> boxes;
  for (long long w = 0; w <= max_side; ++w) {
    for (long long h = 0; h <= max_side; ++h) boxes.push_back({w, h});
  }
  std::sort(boxes.begin(), boxes.end(), [](auto a, auto b) {
    long long pa = a.first * a.second, pb = b.first * b.second;
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (auto [w, h] : boxes) {
    if (auto drw = oracle_realize(rep, w, h, opts)) return MinAreaResult{w * h, *drw};
  }
  return std::nullopt;
}

}  // namespace octi
