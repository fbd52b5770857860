#pragma once

#include <cstdint>
#include <vector>

#include "octi/rep.hpp"

namespace octi {

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// Integer coordinates per vertex.
struct GridDrawing {
  std::vector<Point> coords;

  long long width() const;
  long long height() const;
};

// Area of the smallest axis-parallel bounding rectangle.
long long bbox_area(const GridDrawing& drw);

// Checks that every edge runs along its dart's direction with positive
// extent and that the drawing is simple.
ValidationReport validate_drawing(const OctiRep& rep, const GridDrawing& drw);

// Translates so that min x and min y are zero.
GridDrawing normalized(const GridDrawing& drw);

}  // namespace octi
