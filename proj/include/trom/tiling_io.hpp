#pragma once

#include <string>
#include <string_view>

#include "trom/shape.hpp"

namespace trom {

// JSON array of placements: {"shape": "L-A", "anchor": [x,y], "cells":
// [[x,y],[x,y],[x,y]]}.  List order is preserved but carries no meaning.
std::string tiling_to_json(const Tiling& t);

// Inverse of the above.  "cells" is optional on input; when present it must
// match what the shape and anchor produce.  Throws SyntaxError on anything
// malformed.
Tiling tiling_from_json(std::string_view text);

} // namespace trom
