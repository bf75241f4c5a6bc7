#pragma once

#include <string>

#include "trom/region.hpp"

namespace trom {

// Text picture of the region: '.' free cell, 'X' defect, ' ' outside.  With
// a tiling, covered cells get one letter per tromino, cycling the alphabet
// without X so defects stay unambiguous.  Rows print top to bottom.
std::string render_ascii(const Region& r);
std::string render_ascii(const Region& r, const Tiling& t);

// Self-contained SVG with one square per cell, a fixed colour cycle per
// tromino and heavy outlines around each piece.  Deterministic byte for
// byte: integer coordinates only, placements in input order.
std::string render_svg(const Region& r);
std::string render_svg(const Region& r, const Tiling& t);

} // namespace trom
