#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trom/cell.hpp"
#include "trom/shape.hpp"

namespace trom {

// A finite edge-connected set of cells, some of which may be marked as
// defects.  Defects belong to the footprint but must stay uncovered.
// Construction validates connectivity and defect containment; instances
// are immutable afterwards.
class Region {
public:
    Region() = default;  // empty region
    Region(std::vector<Cell> cells, std::vector<Cell> defects = {});

    const std::vector<Cell>& cells() const { return cells_; }      // sorted
    const std::vector<Cell>& defects() const { return defects_; }  // sorted
    std::vector<Cell> free_cells() const;                          // cells minus defects

    bool contains(Cell c) const;
    bool is_defect(Cell c) const;
    std::size_t size() const { return cells_.size(); }
    std::size_t free_size() const { return cells_.size() - defects_.size(); }
    bool empty() const { return cells_.empty(); }

    Region translated(int dx, int dy) const;
    Region normalized() const;  // min x = min y = 0
    bool congruent(const Region& o) const;  // equal up to translation

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<Cell> cells_;
    std::vector<Cell> defects_;
};

// Text format: '#' cell, 'X' defect, '.' empty; first line is the top row.
Region parse_region(std::string_view text);
std::string serialize_region(const Region& r);  // normalizes first

// Each cell explodes into a 2x2 block: (x,y) -> (2x,2y) .. (2x+1,2y+1);
// defect cells explode into 2x2 blocks of defects.
Region subdivide_boxplus(const Region& r);

// All placements of shapes from ps that fit inside the free cells,
// sorted by anchor then shape.
std::vector<Placement> enumerate_placements(const Region& r, PieceSet ps);

struct ValidationReport {
    bool ok = true;
    std::string violation;  // empty when ok

    explicit operator bool() const { return ok; }
};

// A tiling is valid when placements are pairwise disjoint, stay inside the
// region, avoid defects, and cover every free cell.
ValidationReport validate_tiling(const Region& r, const Tiling& t);

} // namespace trom
