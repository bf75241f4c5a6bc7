#pragma once

#include <vector>

#include "trom/shape.hpp"

// Frozen placement tables for the small cases the rectangle tiler bottoms
// out on.  Regenerate with tools/make_tables (output is this file's .cpp).
namespace trom::tables {

const std::vector<Placement>& ad2();       // AR(2,2), 12 cells
const std::vector<Placement>& ar2x5();     // AR(2,5), 27 cells
const std::vector<Placement>& ad3();       // AR(3,3), 24 cells
const std::vector<Placement>& ar3x6();     // AR(3,6), 45 cells

// Band of cells appearing when AR(a,b) grows to AR(a,b+3) and the old
// tiling is pushed 3 to the right; stored in (x, y-b) coordinates.
const std::vector<Placement>& delta2();    // a = 2, 15 cells
const std::vector<Placement>& delta3();    // a = 3, 21 cells

} // namespace trom::tables
