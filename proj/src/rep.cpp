#include "octi/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace octi {

void fail(const std::string& code, const std::string& message) {
  throw Error{code, message};
}

DartId OctiRep::rot_next(DartId d) const {
  const auto& rot = rotation[static_cast<std::size_t>(dart_from(d))];
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] == d) return rot[(i + 1) % rot.size()];
  }
  fail("CorruptRotation", "dart " + std::to_string(d) + " missing from its rotation");
}

DartId OctiRep::rot_prev(DartId d) const {
  const auto& rot = rotation[static_cast<std::size_t>(dart_from(d))];
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] == d) return rot[(i + rot.size() - 1) % rot.size()];
  }
  fail("CorruptRotation", "dart " + std::to_string(d) + " missing from its rotation");
}

OctiRep OctiRep::from_edges(int vertex_count, const std::vector<EdgeSpec>& edges,
                            VertexId outer_from, VertexId outer_to) {
  OctiRep rep;
  rep.vertex_count = vertex_count;
  rep.darts.reserve(edges.size() * 2);
  rep.rotation.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& e : edges) {
    DartId d = static_cast<DartId>(rep.darts.size());
    rep.darts.push_back({e.u, e.dir});
    rep.darts.push_back({e.v, e.dir.opposite()});
    rep.rotation[static_cast<std::size_t>(e.u)].push_back(d);
    rep.rotation[static_cast<std::size_t>(e.v)].push_back(d + 1);
  }
  for (auto& rot : rep.rotation) {
    std::sort(rot.begin(), rot.end(), [&](DartId a, DartId b) {
      return rep.dart_dir(a).value < rep.dart_dir(b).value;
    });
  }
  rep.outer_dart = -1;
  for (DartId d = 0; d < static_cast<DartId>(rep.darts.size()); ++d) {
    if (rep.dart_from(d) == outer_from && rep.dart_to(d) == outer_to) {
      rep.outer_dart = d;
      break;
    }
  }
  if (rep.outer_dart < 0) fail("BadOuterDart", "no dart matches requested outer face");
  return rep;
}

int Face::reflex_count() const {
  int n = 0;
  for (const auto& c : corners) n += c.reflex() ? 1 : 0;
  return n;
}

int Face::inflex_count() const {
  int n = 0;
  for (const auto& c : corners) n += c.inflex() ? 1 : 0;
  return n;
}

const Face& FaceSet::outer() const {
  for (const auto& f : faces) {
    if (f.outer) return f;
  }
  fail("NoOuterFace", "face set lacks an outer face");
}

namespace {

bool structurally_sound(const OctiRep& rep, ValidationReport* report) {
  bool ok = true;
  auto flag = [&](const std::string& code, const std::string& detail, int where) {
    ok = false;
    if (report) report->push_back({code, detail, where});
  };

  if (rep.vertex_count <= 0) flag("EmptyRep", "representation has no vertices", -1);
  if (rep.darts.size() % 2 != 0) flag("DanglingDart", "odd number of darts", -1);
  if (static_cast<int>(rep.rotation.size()) != rep.vertex_count)
    flag("CorruptRotation", "rotation table size mismatch", -1);
  if (!ok) return false;

  const int dart_count = static_cast<int>(rep.darts.size());
  for (DartId d = 0; d < dart_count; ++d) {
    VertexId v = rep.dart_from(d);
    if (v < 0 || v >= rep.vertex_count) {
      flag("BadVertexRef", "dart " + std::to_string(d) + " originates at vertex " + std::to_string(v), d);
    }
  }
  if (!ok) return false;

  std::vector<int> seen(static_cast<std::size_t>(dart_count), 0);
  for (VertexId v = 0; v < rep.vertex_count; ++v) {
    for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) {
      if (d < 0 || d >= dart_count) {
        flag("BadDartRef", "rotation of vertex " + std::to_string(v) + " lists unknown dart", v);
        continue;
      }
      if (rep.dart_from(d) != v)
        flag("ForeignDart", "rotation of vertex " + std::to_string(v) + " lists a dart of another vertex", v);
      seen[static_cast<std::size_t>(d)] += 1;
    }
  }
  for (DartId d = 0; d < dart_count; ++d) {
    if (seen[static_cast<std::size_t>(d)] != 1)
      flag("CorruptRotation", "dart " + std::to_string(d) + " appears " + std::to_string(seen[static_cast<std::size_t>(d)]) + " times in rotations", d);
  }
  if (rep.outer_dart < 0 || rep.outer_dart >= dart_count)
    flag("BadOuterDart", "outer dart out of range", rep.outer_dart);
  return ok;
}

}  // namespace

ValidationReport validate_rep(const OctiRep& rep) {
  ValidationReport report;
  if (!structurally_sound(rep, &report)) return report;

  for (VertexId v = 0; v < rep.vertex_count; ++v) {
    int deg = rep.degree(v);
    if (deg < 1)
      report.push_back({"IsolatedVertex", "vertex " + std::to_string(v) + " has degree 0", v});
    if (deg > 8)
      report.push_back({"MaxDegreeExceeded", "vertex " + std::to_string(v) + " has degree " + std::to_string(deg), v});
  }

  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    if (rep.dart_dir(2 * e).opposite() != rep.dart_dir(2 * e + 1))
      report.push_back({"TwinDirectionMismatch", "edge " + std::to_string(e), e});
    if (rep.edge_u(e) == rep.edge_v(e))
      report.push_back({"SelfLoop", "edge " + std::to_string(e), e});
  }

  // Corner angles: each consecutive pair in a rotation spans 1..7 units and
  // the units around a vertex sum to 8 (equivalently, the rotation is the
  // ccw order by direction). Degree-1 vertices carry the full 8-unit corner.
  for (VertexId v = 0; v < rep.vertex_count; ++v) {
    const auto& rot = rep.rotation[static_cast<std::size_t>(v)];
    if (rot.empty()) continue;
    if (rot.size() == 1) continue;
    int sum = 0;
    bool bad = false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId a = rot[i];
      DartId b = rot[(i + 1) % rot.size()];
      int units = ccw_units(rep.dart_dir(a), rep.dart_dir(b));
      if (units == 8) {
        report.push_back({"AngleViolation",
                          "vertex " + std::to_string(v) + " has two darts in direction " +
                              std::to_string(rep.dart_dir(a).value),
                          v});
        bad = true;
        break;
      }
      sum += units;
    }
    if (!bad && sum != 8)
      report.push_back({"RotationOrderViolation",
                        "corner units at vertex " + std::to_string(v) + " sum to " + std::to_string(sum),
                        v});
  }
  if (!report.empty()) return report;

  // Face structure: per component, Euler count v - e + f = 2 with exactly one
  // boundary cycle (corner sum 4k+8); all other faces sum to 4k-8. The face
  // of outer_dart must be a boundary cycle.
  FaceSet fs = derive_faces(rep);

  std::vector<int> comp(static_cast<std::size_t>(rep.vertex_count), -1);
  int comp_count = 0;
  for (VertexId v0 = 0; v0 < rep.vertex_count; ++v0) {
    if (comp[static_cast<std::size_t>(v0)] >= 0) continue;
    std::queue<VertexId> q;
    q.push(v0);
    comp[static_cast<std::size_t>(v0)] = comp_count;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) {
        VertexId w = rep.dart_to(d);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp_count;
          q.push(w);
        }
      }
    }
    ++comp_count;
  }

  std::vector<int> comp_vertices(static_cast<std::size_t>(comp_count), 0);
  std::vector<int> comp_edges(static_cast<std::size_t>(comp_count), 0);
  std::vector<int> comp_faces(static_cast<std::size_t>(comp_count), 0);
  std::vector<int> comp_boundary(static_cast<std::size_t>(comp_count), 0);
  for (VertexId v = 0; v < rep.vertex_count; ++v) comp_vertices[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]++;
  for (EdgeId e = 0; e < rep.edge_count(); ++e) comp_edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(rep.edge_u(e))])]++;

  for (const auto& face : fs.faces) {
    int c = comp[static_cast<std::size_t>(rep.dart_from(face.darts.front()))];
    comp_faces[static_cast<std::size_t>(c)]++;
    int k = static_cast<int>(face.corners.size());
    int sum = 0;
    for (const auto& corner : face.corners) sum += corner.units;
    if (sum == 4 * k + 8) {
      comp_boundary[static_cast<std::size_t>(c)]++;
      if (!face.boundary_cycle)
        report.push_back({"FaceAngleSumViolation", "face " + std::to_string(face.id), face.id});
    } else if (sum != 4 * k - 8) {
      report.push_back({"FaceAngleSumViolation",
                        "face " + std::to_string(face.id) + " has corner sum " + std::to_string(sum) +
                            " over " + std::to_string(k) + " corners",
                        face.id});
    }
  }
  for (int c = 0; c < comp_count; ++c) {
    if (comp_boundary[static_cast<std::size_t>(c)] != 1)
      report.push_back({"BoundaryCycleViolation",
                        "component " + std::to_string(c) + " has " +
                            std::to_string(comp_boundary[static_cast<std::size_t>(c)]) + " boundary cycles",
                        c});
    if (comp_vertices[static_cast<std::size_t>(c)] - comp_edges[static_cast<std::size_t>(c)] + comp_faces[static_cast<std::size_t>(c)] != 2)
      report.push_back({"EulerViolation",
                        "component " + std::to_string(c) + ": v - e + f = " +
                            std::to_string(comp_vertices[static_cast<std::size_t>(c)] - comp_edges[static_cast<std::size_t>(c)] +
                                           comp_faces[static_cast<std::size_t>(c)]),
                        c});
  }
  if (!fs.faces[static_cast<std::size_t>(fs.face_of_dart[static_cast<std::size_t>(rep.outer_dart)])].boundary_cycle)
    report.push_back({"OuterFaceNotBoundary", "outer dart's face has an internal corner sum", rep.outer_dart});

  return report;
}

FaceSet derive_faces(const OctiRep& rep) {
  FaceSet fs;
  const int dart_count = static_cast<int>(rep.darts.size());
  fs.face_of_dart.assign(static_cast<std::size_t>(dart_count), -1);

  for (DartId d0 = 0; d0 < dart_count; ++d0) {
    if (fs.face_of_dart[static_cast<std::size_t>(d0)] >= 0) continue;
    Face face;
    face.id = static_cast<FaceId>(fs.faces.size());
    DartId d = d0;
    do {
      if (fs.face_of_dart[static_cast<std::size_t>(d)] >= 0)
        fail("FaceTraversalError", "face traversal does not close at dart " + std::to_string(d));
      fs.face_of_dart[static_cast<std::size_t>(d)] = face.id;
      face.darts.push_back(d);
      DartId next = rep.face_next(d);
      Corner corner;
      corner.vertex = rep.dart_to(d);
      corner.face = face.id;
      corner.units = ccw_units(rep.dart_dir(next), rep.dart_dir(twin(d)));
      corner.entry_dart = d;
      face.corners.push_back(corner);
      d = next;
    } while (d != d0);

    int k = static_cast<int>(face.corners.size());
    int sum = 0;
    for (const auto& c : face.corners) sum += c.units;
    face.boundary_cycle = (sum == 4 * k + 8);
    fs.faces.push_back(std::move(face));
  }
  FaceId outer_id = fs.face_of_dart[static_cast<std::size_t>(rep.outer_dart)];
  fs.faces[static_cast<std::size_t>(outer_id)].outer = true;
  return fs;
}

ParamStats compute_params(const OctiRep& rep) { return compute_params(rep, derive_faces(rep)); }

ParamStats compute_params(const OctiRep& rep, const FaceSet& faces) {
  ParamStats stats;
  for (const auto& face : faces.faces) {
    int r = face.reflex_count();
    stats.omega += r;
    if (r > 0) stats.phi += 1;
    stats.kappa = std::max(stats.kappa, r);
  }
  for (EdgeId e = 0; e < rep.edge_count(); ++e) {
    if (rep.edge_dir(e).diagonal()) stats.delta += 1;
  }
  return stats;
}

bool is_connected(const OctiRep& rep) {
  if (rep.vertex_count == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(rep.vertex_count), 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  int found = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (DartId d : rep.rotation[static_cast<std::size_t>(v)]) {
      VertexId w = rep.dart_to(d);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        q.push(w);
        ++found;
      }
    }
  }
  return found == rep.vertex_count;
}

bool is_convex(const OctiRep& rep, const FaceSet& faces) {
  (void)rep;
  for (const auto& face : faces.faces) {
    if (face.outer) {
      if (face.inflex_count() > 0) return false;
    } else if (face.reflex_count() > 0) {
      return false;
    }
  }
  return true;
}

}  // namespace octi
