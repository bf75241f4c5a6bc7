#include "trom/region.hpp"

#include <algorithm>
#include <limits>

#include "trom/errors.hpp"

namespace trom {

Region::Region(std::vector<Cell> cells, std::vector<Cell> defects)
    : cells_(std::move(cells)), defects_(std::move(defects)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    std::sort(defects_.begin(), defects_.end());
    defects_.erase(std::unique(defects_.begin(), defects_.end()), defects_.end());
    for (Cell d : defects_)
        if (!std::binary_search(cells_.begin(), cells_.end(), d))
            throw DefectOutside("defect not inside the region footprint");
    if (!edge_connected(cells_)) throw DisconnectedRegion("region footprint is not edge-connected");
}

std::vector<Cell> Region::free_cells() const {
    std::vector<Cell> out;
    out.reserve(cells_.size() - defects_.size());
    std::set_difference(cells_.begin(), cells_.end(), defects_.begin(), defects_.end(),
                        std::back_inserter(out));
    return out;
}

bool Region::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Region::is_defect(Cell c) const {
    return std::binary_search(defects_.begin(), defects_.end(), c);
}

Region Region::translated(int dx, int dy) const {
    Region out;
    out.cells_ = cells_;
    out.defects_ = defects_;
    for (Cell& c : out.cells_) c = {c.x + dx, c.y + dy};
    for (Cell& c : out.defects_) c = {c.x + dx, c.y + dy};
    return out;
}

Region Region::normalized() const {
    if (cells_.empty()) return *this;
    int mx = std::numeric_limits<int>::max(), my = mx;
    for (Cell c : cells_) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    return translated(-mx, -my);
}

bool Region::congruent(const Region& o) const {
    if (cells_.size() != o.cells_.size() || defects_.size() != o.defects_.size()) return false;
    return normalized() == o.normalized();
}

Region parse_region(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    for (std::string& line : lines) {
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
    }

    std::vector<Cell> cells, defects;
    int rows = static_cast<int>(lines.size());
    for (int row = 0; row < rows; ++row) {
        const std::string& line = lines[static_cast<std::size_t>(row)];
        int y = rows - 1 - row;  // first line is the top
        for (int x = 0; x < static_cast<int>(line.size()); ++x) {
            char ch = line[static_cast<std::size_t>(x)];
            switch (ch) {
            case '#': cells.push_back({x, y}); break;
            case 'X':
                cells.push_back({x, y});
                defects.push_back({x, y});
                break;
            case '.': break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "' in region text");
            }
        }
    }
    if (cells.empty()) throw SyntaxError("region text contains no cells");
    return Region(std::move(cells), std::move(defects));
}

std::string serialize_region(const Region& r) {
    Region n = r.normalized();
    if (n.empty()) return "";
    int maxx = 0, maxy = 0;
    for (Cell c : n.cells()) {
        maxx = std::max(maxx, c.x);
        maxy = std::max(maxy, c.y);
    }
    std::string out;
    for (int y = maxy; y >= 0; --y) {
        int rowmax = -1;
        for (Cell c : n.cells())
            if (c.y == y) rowmax = std::max(rowmax, c.x);
        for (int x = 0; x <= rowmax; ++x) {
            Cell c{x, y};
            out += !n.contains(c) ? '.' : n.is_defect(c) ? 'X' : '#';
        }
        out += '\n';
    }
    return out;
}

Region subdivide_boxplus(const Region& r) {
    std::vector<Cell> cells, defects;
    cells.reserve(r.cells().size() * 4);
    defects.reserve(r.defects().size() * 4);
    auto blow_up = [](Cell c, std::vector<Cell>& out) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.push_back({2 * c.x + i, 2 * c.y + j});
    };
    for (Cell c : r.cells()) blow_up(c, cells);
    for (Cell c : r.defects()) blow_up(c, defects);
    return Region(std::move(cells), std::move(defects));
}

std::vector<Placement> enumerate_placements(const Region& r, PieceSet ps) {
    std::vector<Cell> free = r.free_cells();
    auto is_free = [&](Cell c) { return std::binary_search(free.begin(), free.end(), c); };
    std::vector<Placement> out;
    for (Cell anchor : free) {
        for (int k = 0; k < kShapeCount; ++k) {
            auto kind = static_cast<ShapeKind>(k);
            if (!ps.contains(kind)) continue;
            Placement p{kind, anchor};
            auto cov = p.covered();
            if (std::all_of(cov.begin(), cov.end(), is_free)) out.push_back(p);
        }
    }
    // Anchors of L-C never coincide with a covered cell, so sweep those too.
    if (ps.contains(ShapeKind::LC)) {
        for (Cell anchor : free) {
            Cell below{anchor.x, anchor.y - 1};
            if (is_free(below)) continue;  // already swept above
            Placement p{ShapeKind::LC, below};
            auto cov = p.covered();
            if (std::all_of(cov.begin(), cov.end(), is_free)) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
        if (a.anchor != b.anchor) return a.anchor < b.anchor;
        return a.shape < b.shape;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ValidationReport validate_tiling(const Region& r, const Tiling& t) {
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    auto where = [](Cell c) {
        return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    };
    std::vector<Cell> covered;
    covered.reserve(t.placements.size() * 3);
    for (const Placement& p : t.placements) {
        for (Cell c : p.covered()) {
            if (!r.contains(c)) return fail("placement covers cell outside region at " + where(c));
            if (r.is_defect(c)) return fail("placement covers defect at " + where(c));
            covered.push_back(c);
        }
    }
    std::sort(covered.begin(), covered.end());
    for (std::size_t i = 1; i < covered.size(); ++i)
        if (covered[i] == covered[i - 1]) return fail("overlap at " + where(covered[i]));
    std::vector<Cell> free = r.free_cells();
    if (covered.size() != free.size()) {
        std::vector<Cell> missing;
        std::set_difference(free.begin(), free.end(), covered.begin(), covered.end(),
                            std::back_inserter(missing));
        if (!missing.empty()) return fail("uncovered cell at " + where(missing.front()));
    }
    return {};
}

} // namespace trom
