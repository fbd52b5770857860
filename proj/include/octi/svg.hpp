#pragma once

#include <string>

#include "octi/drawing.hpp"
#include "octi/rep.hpp"

namespace octi {

// Deterministic SVG: one line per edge, one circle per vertex, y axis
// flipped for screen coordinates, canvas padded by one grid unit. Throws
// InvalidDrawing when the drawing does not realize the representation.
std::string render_svg(const OctiRep& rep, const GridDrawing& drw, long long scale);

}  // namespace octi
