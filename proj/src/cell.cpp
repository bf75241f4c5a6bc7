#include "trom/cell.hpp"

#include <algorithm>
#include <limits>

namespace trom {

std::vector<Cell> apply_transform(const std::vector<Cell>& cells, const Transform& t) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (Cell c : cells) out.push_back(t.apply(c));
    return out;
}

std::vector<Cell> normalize_cells(std::vector<Cell> cells) {
    if (cells.empty()) return cells;
    int mx = std::numeric_limits<int>::max(), my = mx;
    for (Cell c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    for (Cell& c : cells) {
        c.x -= mx;
        c.y -= my;
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

bool edge_connected(const std::vector<Cell>& cells) {
    if (cells.size() <= 1) return true;
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](Cell c) {
        return std::binary_search(sorted.begin(), sorted.end(), c);
    };
    std::vector<Cell> stack{sorted[0]};
    std::vector<bool> seen(sorted.size(), false);
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell n : nbrs) {
            if (!has(n)) continue;
            auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
            std::size_t idx = static_cast<std::size_t>(it - sorted.begin());
            if (!seen[idx]) {
                seen[idx] = true;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    return reached == sorted.size();
}

} // namespace trom
