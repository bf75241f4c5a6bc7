#include "trom/sampler.hpp"

#include <algorithm>
#include <unordered_set>

#include "trom/errors.hpp"

namespace trom {

Region random_region(std::mt19937_64& rng, int n_cells, int n_defects) {
    if (n_cells < 1) throw InvalidSpec("random_region needs at least one cell");
    if (n_defects < 0 || n_defects > n_cells)
        throw InvalidSpec("random_region defect count out of range");

    std::unordered_set<Cell> present{{0, 0}};
    std::vector<Cell> cells{{0, 0}};
    std::vector<Cell> frontier;
    std::unordered_set<Cell> in_frontier;
    auto push_frontier = [&](Cell c) {
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell n : nbrs) {
            if (present.count(n) || in_frontier.count(n)) continue;
            in_frontier.insert(n);
            frontier.push_back(n);
        }
    };
    push_frontier({0, 0});

    while (static_cast<int>(cells.size()) < n_cells) {
        std::size_t i = static_cast<std::size_t>(rng() % frontier.size());
        Cell c = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        in_frontier.erase(c);
        present.insert(c);
        cells.push_back(c);
        push_frontier(c);
    }

    std::sort(cells.begin(), cells.end());
    std::vector<Cell> defects;
    std::vector<Cell> pool = cells;
    for (int k = 0; k < n_defects; ++k) {
        std::size_t i = static_cast<std::size_t>(rng() % pool.size());
        defects.push_back(pool[i]);
        pool[i] = pool.back();
        pool.pop_back();
    }
    return Region(std::move(cells), std::move(defects)).normalized();
}

} // namespace trom
