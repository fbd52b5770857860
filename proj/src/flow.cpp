#include "octi/flow.hpp"

#include <algorithm>
#include <queue>

namespace octi {

namespace {

void require_convex_input(const OctiRep& rep, const FaceSet& faces) {
  if (!is_connected(rep)) fail("PreconditionViolated", "flow solver needs a connected representation");
  for (const auto& face : faces.faces) {
    if (face.outer) {
      if (face.inflex_count() > 0)
        fail("PreconditionViolated", "outer face has an inflex corner");
    } else if (face.reflex_count() > 0) {
      fail("PreconditionViolated", "internal face " + std::to_string(face.id) + " has a reflex corner");
    }
  }
}

// Canonical dart of an edge for each network: positive x component for the
// horizontal network, positive y for the vertical one. The face on the left
// of that dart is the geometric upper (resp. left) side.
std::optional<DartId> horizontal_canonical(const OctiRep& rep, EdgeId e) {
  for (DartId d : {2 * e, 2 * e + 1}) {
    int dir = rep.dart_dir(d).value;
    if (dir == 0 || dir == 1 || dir == 7) return d;
  }
  return std::nullopt;  // vertical edge: no width
}

std::optional<DartId> vertical_canonical(const OctiRep& rep, EdgeId e) {
  for (DartId d : {2 * e, 2 * e + 1}) {
    int dir = rep.dart_dir(d).value;
    if (dir == 1 || dir == 2 || dir == 3) return d;
  }
  return std::nullopt;  // horizontal edge: no height
}

// Conservation rows for one network: per internal face, inflow = outflow.
void add_conservation(LinearProgram& lp, const FlowNetworks& nets, const std::vector<FlowArc>& arcs) {
  std::vector<std::vector<std::pair<int, Rational>>> rows(nets.faces.faces.size());
  for (const auto& arc : arcs) {
    if (arc.head != nets.outer_face) rows[static_cast<std::size_t>(arc.head)].push_back({arc.edge, Rational(1)});
    if (arc.tail != nets.outer_face) rows[static_cast<std::size_t>(arc.tail)].push_back({arc.edge, Rational(-1)});
  }
  for (std::size_t f = 0; f < rows.size(); ++f) {
    if (!rows[f].empty()) lp.add_constraint(rows[f], Rational(0));
  }
}

long long to_longlong(const Integer& z) {
  if (!z.fits_slong_p()) fail("Overflow", "length does not fit a machine integer");
  return z.get_si();
}

}  // namespace

FlowNetworks build_networks(const OctiRep& rep) {
  FlowNetworks nets;
  nets.faces = derive_faces(rep);
  require_convex_input(rep, nets.faces);
  nets.outer_face = nets.faces.outer().id;

  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    bool both = false;
    if (auto d = horizontal_canonical(rep, e)) {
      nets.horizontal.push_back({e, nets.faces.face_of_dart[static_cast<std::size_t>(*d)],
                                 nets.faces.face_of_dart[static_cast<std::size_t>(twin(*d))]});
      both = true;
    }
    if (auto d = vertical_canonical(rep, e)) {
      nets.vertical.push_back({e, nets.faces.face_of_dart[static_cast<std::size_t>(*d)],
                               nets.faces.face_of_dart[static_cast<std::size_t>(twin(*d))]});
      if (both) nets.coupled.push_back(e);
    }
  }
  return nets;
}

FlowResult solve_realization(const OctiRep& rep) {
  FlowNetworks nets = build_networks(rep);
  LinearProgram lp(rep.edge_count());
  for (EdgeId e = 0; e < rep.edge_count(); ++e) lp.set_lower_bound(e, Rational(1));
  add_conservation(lp, nets, nets.horizontal);
  add_conservation(lp, nets, nets.vertical);

  auto sol = lp.solve();
  FlowResult result;
  if (sol.status != LinearProgram::Status::Optimal) {
    result.feasible = false;
    result.infeasible_rows = sol.infeasible_rows;
    return result;
  }
  result.feasible = true;
  Integer scale = common_denominator(sol.values);
  result.lengths.reserve(sol.values.size());
  for (const auto& v : sol.values) {
    Rational scaled = v * Rational(scale);
    result.lengths.push_back(to_longlong(Integer(scaled.get_num())));
  }
  return result;
}

ExtentResult min_extents(const OctiRep& rep, const std::map<EdgeId, long long>& diag) {
  FlowNetworks nets = build_networks(rep);
  for (EdgeId e : nets.coupled) {
    auto it = diag.find(e);
    if (it == diag.end())
      fail("PreconditionViolated", "diagonal edge " + std::to_string(e) + " has no fixed length");
    if (it->second < 1) fail("PreconditionViolated", "diagonal lengths must be positive");
  }

  ExtentResult result;
  result.lengths.assign(static_cast<std::size_t>(rep.edge_count()), 0);
  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    if (rep.edge_dir(e).diagonal()) result.lengths[static_cast<std::size_t>(e)] = diag.at(e);
  }

  // With the diagonals fixed the two networks share no variables, so width
  // and height are minimized independently.
  for (int which = 0; which < 2; ++which) {
    const auto& arcs = which == 0 ? nets.horizontal : nets.vertical;
    LinearProgram lp(rep.edge_count());
    for (EdgeId e = 0; e < rep.edge_count(); ++e) lp.set_lower_bound(e, Rational(1));
    for (EdgeId e : nets.coupled) lp.fix_variable(e, Rational(static_cast<long>(diag.at(e))));
    add_conservation(lp, nets, arcs);
    for (const auto& arc : arcs) {
      if (arc.tail == nets.outer_face) lp.set_objective(arc.edge, Rational(1));
    }
    auto sol = lp.solve();
    if (sol.status != LinearProgram::Status::Optimal) {
      result.feasible = false;
      return result;
    }
    // Conservation matrices are network matrices, so the basic optimum with
    // integer fixed diagonals is integral.
    long long total = 0;
    for (const auto& arc : arcs) {
      Rational v = sol.values[static_cast<std::size_t>(arc.edge)];
      if (v.get_den() != 1) fail("LpInternal", "non-integral basic solution on a network matrix");
      long long len = to_longlong(Integer(v.get_num()));
      result.lengths[static_cast<std::size_t>(arc.edge)] = len;
      if (arc.tail == nets.outer_face) total += len;
    }
    if (which == 0)
      result.width = total;
    else
      result.height = total;
  }
  result.feasible = true;
  return result;
}

GridDrawing drawing_from_lengths(const OctiRep& rep, const LengthAssignment& lens) {
  if (static_cast<int>(lens.size()) != rep.edge_count())
    fail("PreconditionViolated", "length assignment size mismatch");
  for (long long len : lens) {
    if (len < 1) fail("PreconditionViolated", "lengths must be positive");
  }
  if (!is_connected(rep)) fail("PreconditionViolated", "propagation needs a connected representation");

  GridDrawing drw;
  drw.coords.assign(static_cast<std::size_t>(rep.vertex_count), Point{});
  std::vector<char> placed(static_cast<std::size_t>(rep.vertex_count), 0);
  std::queue<VertexId> q;
  placed[0] = 1;
  q.push(0);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    Point pv = drw.coords[static_cast<std::size_t>(v)];
    for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) {
      VertexId w = rep.dart_to(d);
      Direction dir = rep.dart_dir(d);
      long long len = lens[static_cast<std::size_t>(dart_edge(d))];
      Point pw{pv.x + dir.dx() * len, pv.y + dir.dy() * len};
      if (!placed[static_cast<std::size_t>(w)]) {
        placed[static_cast<std::size_t>(w)] = 1;
        drw.coords[static_cast<std::size_t>(w)] = pw;
        q.push(w);
      } else if (!(drw.coords[static_cast<std::size_t>(w)] == pw)) {
        fail("ClosureViolation",
             "vertex " + std::to_string(w) + " receives two positions; lengths violate conservation");
      }
    }
  }
  return normalized(drw);
}

}  // namespace octi
