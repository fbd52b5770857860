#pragma once

#include <map>
#include <optional>
#include <vector>

#include "octi/drawing.hpp"
#include "octi/lp.hpp"
#include "octi/rep.hpp"

namespace octi {

// Arc of one auxiliary network; flow value is the edge's width (horizontal
// network) or height (vertical network). Both arcs of a diagonal edge share
// the edge's variable.
struct FlowArc {
  EdgeId edge = 0;
  FaceId tail = 0;  // face on the upper/left side
  FaceId head = 0;  // face on the lower/right side
};

struct FlowNetworks {
  FaceSet faces;
  FaceId outer_face = 0;
  std::vector<FlowArc> horizontal;  // G-> : edges with nonzero width
  std::vector<FlowArc> vertical;    // G-| : edges with nonzero height
  std::vector<EdgeId> coupled;      // diagonal edges (one arc in each network)
};

// Positive integer length per edge: width for horizontal, height for
// vertical, common extent for diagonal edges.
using LengthAssignment = std::vector<long long>;

struct FlowResult {
  bool feasible = false;
  LengthAssignment lengths;            // when feasible
  std::vector<int> infeasible_rows;    // failing constraint combination otherwise
};

struct ExtentResult {
  bool feasible = false;
  long long width = 0;
  long long height = 0;
  LengthAssignment lengths;
};

// Requires a valid, connected, convex representation (throws
// PreconditionViolated otherwise).
FlowNetworks build_networks(const OctiRep& rep);

// Feasibility of {x >= 1, conservation, coupling}; rational solution scaled
// to integers by the common denominator.
FlowResult solve_realization(const OctiRep& rep);

// Minimum width and height with every diagonal edge fixed; the returned
// assignment achieves both simultaneously.
ExtentResult min_extents(const OctiRep& rep, const std::map<EdgeId, long long>& diag);

// Coordinates by breadth-first propagation from vertex 0, translated so the
// minimum coordinates are zero. Throws ClosureViolation if `lens` violates
// conservation.
GridDrawing drawing_from_lengths(const OctiRep& rep, const LengthAssignment& lens);

}  // namespace octi
