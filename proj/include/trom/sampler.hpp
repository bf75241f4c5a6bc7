#pragma once

#include <random>

#include "trom/region.hpp"

namespace trom {

// Connected region grown cell by cell from the origin, optionally with
// defects sprinkled afterwards.  Draws from rng() directly (no distribution
// objects) so a seed reproduces the same region on every platform.
Region random_region(std::mt19937_64& rng, int n_cells, int n_defects = 0);

} // namespace trom
