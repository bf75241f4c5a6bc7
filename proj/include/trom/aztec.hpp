#pragma once

#include <utility>
#include <vector>

#include "trom/region.hpp"

namespace trom {

// Staircase band with a unit squares on the southwestern side and b on the
// northwestern side; a = b degenerates to the diamond of order a.
struct AztecRectangleSpec {
    int a = 1;
    int b = 1;
};

// A k-stair: 2k+1 trominoes forming a double diagonal of 3k+2 rows with a
// single cell at one end.  Four orientations: the diagonal rises to the
// right or to the left, and the single cell sits at the top or the bottom.
enum class StairOrientation {
    up_right,        // rises NE, single cell at the top
    up_right_flip,   // rises NE, single cell at the bottom
    up_left,         // rises NW, single cell at the top
    up_left_flip,    // rises NW, single cell at the bottom
};

struct StairSpec {
    int k = 0;
    StairOrientation orientation = StairOrientation::up_right;
};

// Inclusive x-interval [lo, hi] of row y; row widths run 2,4,...,2a, then
// b−a rows of 2a+1 drifting one cell left per row, then 2a,...,4,2.
std::pair<int, int> aztec_row_span(int a, int b, int y);

Region gen_aztec_rectangle(int a, int b);  // 2ab+a+b cells, rows 0..a+b-1
Region gen_aztec_diamond(int n);           // = gen_aztec_rectangle(n, n)

// Divisibility criterion: an L-tromino cover exists iff 2ab+a+b ≡ 0 (mod 3),
// i.e. a ≡ b ≡ 0 or a ≡ b ≡ 2 (mod 3).
bool has_l_cover(int a, int b);

// The 2k+1 placements of a stair whose footprint's min corner is anchor.
std::vector<Placement> build_stair(const StairSpec& spec, Cell anchor);

// Tiles any translated/reflected/rotated stair footprint.  Throws
// InvalidSpec when the cells are not a stair.
std::vector<Placement> tile_strip(const std::vector<Cell>& cells);

// Constructive cover of gen_aztec_rectangle(a,b): peels border rings down
// to stored small cases, extending the long side in steps of 3.  Requires
// has_l_cover(a,b); throws NoCover otherwise.
Tiling tile_aztec(int a, int b);

// Cover of the rectangle minus one defect, for a ≡ b ≡ 1 (mod 3): lays a
// diagonal fringe of corner-linked 2x2 blocks through the defect, solves
// the punctured fringe exactly, and fills both sides with stairs.
Tiling tile_aztec_one_defect(int a, int b, Cell defect);

// Cells that appear when AR(a,b) grows into AR(a,b+3) and the old tiling is
// pushed 3 to the right; reported in (x, y-b) coordinates and only dependent
// on a.  Defined for the stored-base sides a in {2, 3}.
std::vector<Cell> delta_band_cells(int a);

struct AztecEmbedding {
    AztecRectangleSpec spec;
    Cell offset;      // translation applied to the input inside the band
    Region embedded;  // band footprint; everything outside the input: defects
};

// Smallest coverable-size rectangle whose band contains the region's
// bounding box; cells outside the translated region become defects, so the
// embedded instance has an L-cover iff the region does.
AztecEmbedding embed_in_aztec(const Region& r);

} // namespace trom
