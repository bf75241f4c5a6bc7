#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trom/region.hpp"
#include "trom/solver.hpp"

namespace trom {

// Graph on the free cells: orthogonal neighbours plus the main diagonal
// (x,y)-(x+1,y+1).  The anti-diagonal is never an edge.  Triangles of this
// graph are exactly the places a right-oriented tromino fits.
struct RegionGraph {
    std::vector<Cell> vertices;         // sorted free cells
    std::vector<std::vector<int>> adj;  // sorted neighbour lists

    std::size_t edge_count() const;
    int index_of(Cell c) const;  // -1 if absent
};

struct Triangle {
    std::array<int, 3> vertices{};  // region-graph indices, ascending
    Placement placement;            // the L-A / L-B placement it encodes
};

// One vertex per triangle; edge iff the triangles share a cell.  An
// independent set is a set of pairwise disjoint placements.
struct IntersectionGraph {
    std::vector<Triangle> triangles;
    std::vector<std::vector<int>> adj;

    std::size_t edge_count() const;
};

struct Claw {
    int center = -1;
    std::array<int, 3> leaves{};  // pairwise non-adjacent, ascending
};

RegionGraph build_region_graph(const Region& r);
IntersectionGraph build_intersection_graph(const RegionGraph& g);

// First induced K_{1,3} in sorted order, if any.
std::optional<Claw> find_claw(const IntersectionGraph& ig);

// A 9-cell pattern whose presence puts a claw in the intersection graph.
// `from_representative` applied cell-wise to the class representative
// reproduces `cells` exactly (translations included in the chain).
struct ForbiddenVariant {
    std::vector<Cell> cells;  // normalized
    std::vector<Transform> from_representative;
};

struct ForbiddenClass {
    int class_id = 0;  // 1..5
    std::vector<Cell> representative;
    std::vector<ForbiddenVariant> variants;
};

struct ForbiddenOccurrence {
    int class_id = 0;
    std::vector<Transform> transform;  // representative -> absolute cells
    std::vector<Cell> cells;           // sorted, inside the region
};

// Built once, on demand: every union of a center triangle with three leaf
// triangles that touch it in one cell each and miss each other, grouped by
// rotation/reflection/shear equivalence.  Exactly five classes exist.
const std::vector<ForbiddenClass>& forbidden_catalog();

std::vector<ForbiddenOccurrence> detect_forbidden(const Region& r);

// Maximum independent set, branch and bound.  Throws ResourceLimit past the
// node budget.  Returns sorted triangle indices.
std::vector<int> mis_exact(const IntersectionGraph& ig, const SolverOptions& = {});

// Maximum independent set for claw-free graphs via local reductions
// (isolated / simplicial / dominated vertices and neighbourhood struction).
// Throws NotClawFree when the input has an induced claw.
std::vector<int> mis_claw_free(const IntersectionGraph& ig);

struct Decision180 {
    bool covered = false;
    std::optional<Tiling> witness;  // present iff covered
};

// Cover decision for right-oriented trominoes (L-A / L-B): true iff the
// biggest set of disjoint placements reaches free_size/3.  Claw-free inputs
// take the reduction route; inputs with a forbidden pattern fall back to the
// budgeted exact search.
Decision180 decide_180_cover(const Region& r, const SolverOptions& = {});

// Same decision for the mirrored pair (L-C / L-D), by reflecting the region.
Decision180 decide_180_cover_left(const Region& r, const SolverOptions& = {});

// Debug exports: one edge per line.
std::string region_graph_edge_list(const RegionGraph& g);
std::string intersection_graph_edge_list(const IntersectionGraph& ig);

} // namespace trom
