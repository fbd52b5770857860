#pragma once

#include <string>

#include "octi/drawing.hpp"
#include "octi/rep.hpp"

namespace octi {

// OREP: line-based text format for representations.
//   orep 1
//   vertices <n>
//   edge <i> <u> <v> <dir>
//   rot <v> <e_1> ... <e_k>
//   outer <u> <v>
// Canonical serialization sorts records by id; parse accepts any record
// order but requires edge ids 0..m-1 and one rot line per vertex.
OctiRep parse_rep(const std::string& text);
std::string serialize_rep(const OctiRep& rep);

// ODRAW: `odraw 1` then `<v> <x> <y>` per vertex.
GridDrawing parse_drawing(const std::string& text);
std::string serialize_drawing(const GridDrawing& drw);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace octi
