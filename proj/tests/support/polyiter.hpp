#pragma once

#include <vector>

#include "trom/cell.hpp"

namespace testsupport {

// Every fixed polyomino with n cells (translations identified, rotations and
// reflections kept distinct), each normalized to min x = min y = 0 and
// sorted.  Intended for exhaustive checks at small n.
std::vector<std::vector<trom::Cell>> fixed_polyominoes(int n);

} // namespace testsupport
