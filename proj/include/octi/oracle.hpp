#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "octi/drawing.hpp"
#include "octi/rep.hpp"

namespace octi {

struct OracleOptions {
  long long node_budget = 10'000'000;  // placements tried before BudgetExceeded
};

struct OracleStats {
  long long nodes = 0;
};

// Exhaustive backtracking search for a drawing whose bounding box fits in
// width x height. Returns the first drawing found in deterministic order, or
// nullopt when none exists. Throws BudgetExceeded when the node budget runs
// out; exhaustion is never reported as a plain miss.
std::optional<GridDrawing> oracle_realize(const OctiRep& rep, long long width, long long height,
                                          const OracleOptions& opts = {}, OracleStats* stats = nullptr);

// Enumerates every drawing (up to translation) within the box and calls
// `visit`; stops early when visit returns false.
void oracle_enumerate(const OctiRep& rep, long long width, long long height,
                      const std::function<bool(const GridDrawing&)>& visit,
                      const OracleOptions& opts = {}, OracleStats* stats = nullptr);

struct MinAreaResult {
  long long area = 0;
  GridDrawing drawing;
};

// Minimum bounding-box area over all grids (W, H) with W, H <= max_side.
std::optional<MinAreaResult> oracle_min_area(const OctiRep& rep, long long max_side,
                                             const OracleOptions& opts = {});

}  // namespace octi
