#pragma once

#include <array>
#include <cstdint>

namespace octi {

// Octilinear directions in counterclockwise pi/4 steps: 0=E, 1=NE, 2=N,
// 3=NW, 4=W, 5=SW, 6=S, 7=SE.
struct Direction {
  int value = 0;

  constexpr Direction() = default;
  constexpr explicit Direction(int v) : value(((v % 8) + 8) % 8) {}

  constexpr bool diagonal() const { return (value & 1) != 0; }
  constexpr bool horizontal() const { return value == 0 || value == 4; }
  constexpr bool vertical() const { return value == 2 || value == 6; }
  constexpr Direction opposite() const { return Direction(value + 4); }

  // Unit step on the integer grid.
  constexpr int dx() const {
    constexpr std::array<int, 8> k{1, 1, 0, -1, -1, -1, 0, 1};
    return k[static_cast<std::size_t>(value)];
  }
  constexpr int dy() const {
    constexpr std::array<int, 8> k{0, 1, 1, 1, 0, -1, -1, -1};
    return k[static_cast<std::size_t>(value)];
  }

  friend constexpr bool operator==(Direction a, Direction b) { return a.value == b.value; }
  friend constexpr bool operator!=(Direction a, Direction b) { return a.value != b.value; }
};

// Angle in pi/4 units swept counterclockwise from `a` to `b`; 0 is returned
// as 8 (the full-turn corner of a degree-1 vertex).
constexpr int ccw_units(Direction a, Direction b) {
  int u = (b.value - a.value) & 7;
  return u == 0 ? 8 : u;
}

}  // namespace octi
