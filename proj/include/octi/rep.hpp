#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octi/direction.hpp"

namespace octi {

// Dart ids: edge i contributes dart 2i (u -> v) and its twin 2i+1 (v -> u).
using DartId = int;
using VertexId = int;
using EdgeId = int;
using FaceId = int;

inline DartId twin(DartId d) { return d ^ 1; }
inline EdgeId dart_edge(DartId d) { return d >> 1; }

struct Dart {
  VertexId origin = 0;
  Direction dir;
};

// Plane octilinear representation: a graph with a rotation system and a
// direction for every dart. The face on the left of `outer_dart` is the
// outer face.
struct OctiRep {
  int vertex_count = 0;
  std::vector<Dart> darts;                       // 2 * edge_count entries
  std::vector<std::vector<DartId>> rotation;     // per vertex, ccw outgoing darts
  DartId outer_dart = 0;

  int edge_count() const { return static_cast<int>(darts.size()) / 2; }
  int degree(VertexId v) const { return static_cast<int>(rotation[static_cast<std::size_t>(v)].size()); }
  VertexId dart_from(DartId d) const { return darts[static_cast<std::size_t>(d)].origin; }
  VertexId dart_to(DartId d) const { return darts[static_cast<std::size_t>(twin(d))].origin; }
  Direction dart_dir(DartId d) const { return darts[static_cast<std::size_t>(d)].dir; }
  VertexId edge_u(EdgeId e) const { return dart_from(2 * e); }
  VertexId edge_v(EdgeId e) const { return dart_to(2 * e); }
  Direction edge_dir(EdgeId e) const { return dart_dir(2 * e); }

  // Dart following d counterclockwise in the rotation at d's origin.
  DartId rot_next(DartId d) const;
  DartId rot_prev(DartId d) const;
  // Successor of d along the face on its left: ccw-next after twin(d).
  DartId face_next(DartId d) const { return rot_next(twin(d)); }

  // Builds an OctiRep from an edge list; rotations are sorted by direction
  // (the only rotation consistent with the angle rules when directions at a
  // vertex are distinct).
  struct EdgeSpec {
    VertexId u, v;
    Direction dir;  // direction of the dart u -> v
  };
  static OctiRep from_edges(int vertex_count, const std::vector<EdgeSpec>& edges,
                            VertexId outer_from, VertexId outer_to);
};

// A (vertex, face) incidence with its angle in pi/4 units.
struct Corner {
  VertexId vertex = 0;
  FaceId face = 0;
  int units = 0;  // 1..8
  DartId entry_dart = 0;  // face traversal dart entering `vertex`

  bool reflex() const { return units >= 5; }
  bool inflex() const { return units <= 3; }  // strictly convex
  bool flat() const { return units == 4; }
};

struct Face {
  FaceId id = 0;
  bool outer = false;           // face of outer_dart
  bool boundary_cycle = false;  // corner sum is 4k+8 (unbounded side of its component)
  std::vector<DartId> darts;    // traversal order
  std::vector<Corner> corners;  // corners[i] sits at head of darts[i]

  int reflex_count() const;
  int inflex_count() const;
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<FaceId> face_of_dart;  // dart id -> face id

  const Face& outer() const;
};

struct ParamStats {
  int omega = 0;  // total reflex corners
  int phi = 0;    // faces containing at least one reflex corner
  int kappa = 0;  // max reflex corners over faces
  int delta = 0;  // diagonal edges
};

struct Violation {
  std::string code;     // e.g. "MaxDegreeExceeded"
  std::string detail;
  int where = -1;       // offending vertex / dart / face id, -1 if n/a
};

using ValidationReport = std::vector<Violation>;

// Lists every violated representation invariant; empty report == valid.
ValidationReport validate_rep(const OctiRep& rep);

// Faces induced by the rotation system; requires a structurally sound rep
// (use validate_rep first). Throws octi::Error on corrupted rotation data.
FaceSet derive_faces(const OctiRep& rep);

ParamStats compute_params(const OctiRep& rep);
ParamStats compute_params(const OctiRep& rep, const FaceSet& faces);

bool is_connected(const OctiRep& rep);

// No reflex corner in any internal face and no inflex corner in the outer face.
bool is_convex(const OctiRep& rep, const FaceSet& faces);

struct Error {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(const std::string& code, const std::string& message);

}  // namespace octi
