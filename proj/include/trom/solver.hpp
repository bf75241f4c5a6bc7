#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "trom/region.hpp"

namespace trom {

using BigInt = boost::multiprecision::cpp_int;

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000;
};

struct SolveResult {
    std::optional<Tiling> tiling;  // engaged iff covered
    std::uint64_t nodes_expanded = 0;

    bool covered() const { return tiling.has_value(); }
};

struct CountResult {
    BigInt count;
    std::uint64_t nodes_expanded = 0;
};

struct PackingResult {
    std::size_t max_tiles = 0;
    Tiling witness;  // covers a subset of the free cells
    std::uint64_t nodes_expanded = 0;
};

// Backtracking exact-cover search, branching on the uncovered cell with the
// fewest remaining placements (ties: smallest cell).  Deterministic: same
// input, same witness, same node count.  Throws ResourceLimit when the node
// budget runs out — that is a distinct outcome from uncoverable.
SolveResult solve(const Region& r, PieceSet p, const SolverOptions& opt = {});

// Exact number of distinct tilings (sets of placements).
CountResult count(const Region& r, PieceSet p, const SolverOptions& opt = {});

// Maximum number of pairwise-disjoint placements, with a witness.
PackingResult max_packing(const Region& r, PieceSet p, const SolverOptions& opt = {});

} // namespace trom
