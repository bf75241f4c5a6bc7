#include "trom/solver.hpp"

#include <algorithm>
#include <array>

#include "trom/errors.hpp"

namespace trom {

namespace {

// Flattened search space: free cells get dense indices, each placement knows
// which three it covers, each cell knows the placements that cover it.
struct SearchSpace {
    std::vector<Cell> cells;                   // sorted free cells
    std::vector<Placement> placements;
    std::vector<std::array<int, 3>> covers;    // placement -> cell indices
    std::vector<std::vector<int>> candidates;  // cell -> placement indices
};

SearchSpace make_space(const Region& r, PieceSet p) {
    SearchSpace s;
    s.cells = r.free_cells();
    s.placements = enumerate_placements(r, p);
    s.covers.reserve(s.placements.size());
    s.candidates.assign(s.cells.size(), {});
    for (std::size_t i = 0; i < s.placements.size(); ++i) {
        std::array<int, 3> idx{};
        auto cov = s.placements[i].covered();
        for (std::size_t j = 0; j < 3; ++j) {
            auto it = std::lower_bound(s.cells.begin(), s.cells.end(), cov[j]);
            idx[j] = static_cast<int>(it - s.cells.begin());
            s.candidates[static_cast<std::size_t>(idx[j])].push_back(static_cast<int>(i));
        }
        s.covers.push_back(idx);
    }
    return s;
}

class Search {
public:
    Search(const Region& r, PieceSet p, const SolverOptions& opt)
        : s_(make_space(r, p)), budget_(opt.node_budget) {
        covered_.assign(s_.cells.size(), false);
    }

    std::uint64_t nodes() const { return nodes_; }

    bool find_cover() { return dfs_solve(); }

    BigInt count_covers() {
        dfs_count();
        return total_;
    }

    void pack() {
        skipped_.assign(s_.cells.size(), false);
        active_ = static_cast<int>(s_.cells.size());
        dfs_pack();
    }

    Tiling chosen_tiling() const { return to_tiling(chosen_); }
    Tiling best_tiling() const { return to_tiling(best_witness_); }
    std::size_t best_size() const { return best_witness_.size(); }

private:
    bool available(int pi) const {
        const auto& cov = s_.covers[static_cast<std::size_t>(pi)];
        return !covered_[static_cast<std::size_t>(cov[0])] &&
               !covered_[static_cast<std::size_t>(cov[1])] &&
               !covered_[static_cast<std::size_t>(cov[2])];
    }

    void place(int pi, bool on) {
        for (int c : s_.covers[static_cast<std::size_t>(pi)])
            covered_[static_cast<std::size_t>(c)] = on;
    }

    void tick() {
        if (++nodes_ > budget_) throw ResourceLimit("solver node budget exceeded");
    }

    // Uncovered cell with the fewest available placements; ties go to the
    // smallest cell (candidate lists are scanned in sorted cell order).
    // Returns -1 when everything is covered.
    int pick(int& avail) const {
        int best = -1;
        avail = -1;
        for (std::size_t c = 0; c < s_.cells.size(); ++c) {
            if (covered_[c]) continue;
            int cnt = 0;
            for (int pi : s_.candidates[c])
                if (available(pi)) ++cnt;
            if (best < 0 || cnt < avail) {
                best = static_cast<int>(c);
                avail = cnt;
                if (cnt == 0) break;
            }
        }
        return best;
    }

    bool dfs_solve() {
        tick();
        int avail = 0;
        int c = pick(avail);
        if (c < 0) return true;
        if (avail == 0) return false;
        for (int pi : s_.candidates[static_cast<std::size_t>(c)]) {
            if (!available(pi)) continue;
            place(pi, true);
            chosen_.push_back(pi);
            if (dfs_solve()) return true;
            chosen_.pop_back();
            place(pi, false);
        }
        return false;
    }

    void dfs_count() {
        tick();
        int avail = 0;
        int c = pick(avail);
        if (c < 0) {
            ++total_;
            return;
        }
        if (avail == 0) return;
        for (int pi : s_.candidates[static_cast<std::size_t>(c)]) {
            if (!available(pi)) continue;
            place(pi, true);
            dfs_count();
            place(pi, false);
        }
    }

    // Branches on the smallest undecided cell: either some placement covers
    // it or the cell is skipped for good.  Every intermediate state is a
    // valid packing, so the incumbent updates at node entry.
    void dfs_pack() {
        tick();
        if (chosen_.size() > best_witness_.size() || !have_best_) {
            best_witness_ = chosen_;
            have_best_ = true;
        }
        if (static_cast<int>(chosen_.size()) + active_ / 3 <=
            static_cast<int>(best_witness_.size()))
            return;
        std::size_t c = 0;
        while (c < s_.cells.size() && (covered_[c] || skipped_[c])) ++c;
        if (c == s_.cells.size()) return;
        for (int pi : s_.candidates[c]) {
            if (!available(pi)) continue;
            place(pi, true);
            active_ -= 3;
            chosen_.push_back(pi);
            dfs_pack();
            chosen_.pop_back();
            active_ += 3;
            place(pi, false);
        }
        skipped_[c] = true;
        --active_;
        dfs_pack();
        ++active_;
        skipped_[c] = false;
    }

    Tiling to_tiling(const std::vector<int>& idx) const {
        Tiling t;
        t.placements.reserve(idx.size());
        for (int pi : idx) t.placements.push_back(s_.placements[static_cast<std::size_t>(pi)]);
        t.sort();
        return t;
    }

    SearchSpace s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<bool> covered_, skipped_;
    std::vector<int> chosen_, best_witness_;
    bool have_best_ = false;
    int active_ = 0;
    BigInt total_ = 0;
};

} // namespace

SolveResult solve(const Region& r, PieceSet p, const SolverOptions& opt) {
    if (r.free_size() % 3 != 0) return {};  // no search needed
    Search s(r, p, opt);
    SolveResult out;
    if (s.find_cover()) out.tiling = s.chosen_tiling();
    out.nodes_expanded = s.nodes();
    return out;
}

CountResult count(const Region& r, PieceSet p, const SolverOptions& opt) {
    if (r.free_size() % 3 != 0) return {0, 0};
    Search s(r, p, opt);
    CountResult out;
    out.count = s.count_covers();
    out.nodes_expanded = s.nodes();
    return out;
}

PackingResult max_packing(const Region& r, PieceSet p, const SolverOptions& opt) {
    Search s(r, p, opt);
    s.pack();
    PackingResult out;
    out.max_tiles = s.best_size();
    out.witness = s.best_tiling();
    out.nodes_expanded = s.nodes();
    return out;
}

} // namespace trom
