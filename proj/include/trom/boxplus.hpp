#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trom/region.hpp"

namespace trom {

// Plain orthogonal adjacency over the free cells.  Unlike RegionGraph there
// are no diagonal edges, so a 2x2 block of cells is a 4-cycle, not a clique.
struct AdjacencyGraph {
    std::vector<Cell> vertices;         // sorted
    std::vector<std::vector<int>> adj;  // sorted neighbour indices

    int edge_count() const;
    int index_of(Cell c) const;  // -1 when absent
};

AdjacencyGraph build_adjacency_graph(const Region& r);

// A cut splitting a graph into two connected induced halves whose sizes are
// both divisible by 3.
struct DetachCut {
    std::vector<std::pair<Cell, Cell>> edges;  // removed edges (min,max), sorted
    std::array<std::vector<Cell>, 2> parts;    // sorted; parts[0] holds the smallest cell
};

// Strips cycle edges until one cycle is left, then splits that cycle at two
// edges chosen so both halves have size 0 mod 3; edges that ended up inside a
// half are restored.  On a tree the cut degenerates to a single edge.
// Deterministic: smallest candidate edge first.  Throws NotDetachable when no
// cut exists.
DetachCut find_detaching_cut(const AdjacencyGraph& g);

bool is_detachable(const Region& r);

// Binary split tree produced by cutting until every part is non-detachable.
struct DecompositionNode {
    Region region;
    std::optional<DetachCut> cut;      // engaged iff internal node
    std::array<int, 2> child{-1, -1};  // node ids, -1 for a leaf

    bool is_leaf() const { return !cut.has_value(); }
};

struct DecompositionTree {
    std::vector<DecompositionNode> nodes;  // nodes[0] is the root

    std::vector<int> leaf_ids() const;
    std::string to_text() const;  // indented outline for debugging
};

DecompositionTree decompose(const Region& r);

enum class VertexKind : std::uint8_t {
    leaf,
    trunk_straight,
    trunk_bended,
    fork_221,  // the lone 1 sits on one of the two collinear arms
    fork_212,  // the lone 1 sits on the perpendicular arm
    cross_21,  // tags {2,1,1,1}
    cross_24,  // tags {2,2,2,2}
};

std::string_view vertex_kind_name(VertexKind k);

// Degree class of a tree vertex plus its per-edge tags: for each neighbour,
// the size mod 3 of the component hanging off that side once the vertex is
// removed.  In a non-detachable tree of size 3k every tag is 1 or 2, and the
// facing tags across any edge are one of each.
struct VertexClass {
    VertexKind kind;
    std::vector<std::pair<Cell, int>> tags;  // (neighbour cell, tag), sorted

    int tag_toward(Cell nb) const;  // -1 when nb is not a neighbour
};

std::map<Cell, VertexClass> classify_and_tag(const AdjacencyGraph& g);

// L-tromino cover of subdivide_boxplus(r), exactly 4n/3 placements.  The
// region is decomposed into non-detachable parts and each part's blown-up
// blocks are tiled along its tree edges.
Tiling tile_boxplus(const Region& r);

} // namespace trom
