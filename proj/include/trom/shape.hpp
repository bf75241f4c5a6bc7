#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trom/cell.hpp"

namespace trom {

// The six tromino shapes, fixed orientation (no rotation at placement time).
// L-A/L-B are each other's 180-degree rotations, as are L-C/L-D.
enum class ShapeKind : std::uint8_t { LA, LB, LC, LD, IH, IV };

inline constexpr int kShapeCount = 6;

const std::array<Cell, 3>& shape_offsets(ShapeKind k);
std::string_view shape_tag(ShapeKind k);                     // "L-A" .. "I-V"
std::optional<ShapeKind> shape_from_tag(std::string_view);

// Subset of the six shapes a solver may use.
class PieceSet {
public:
    constexpr PieceSet() = default;
    constexpr explicit PieceSet(std::uint8_t mask) : mask_(mask) {}

    static const PieceSet ALL_L;      // L-A, L-B, L-C, L-D
    static const PieceSet RIGHT_180;  // L-A, L-B
    static const PieceSet LEFT_180;   // L-C, L-D
    static const PieceSet I_ONLY;     // I-H, I-V
    static const PieceSet EVERYTHING;

    constexpr bool contains(ShapeKind k) const { return mask_ & (1u << static_cast<int>(k)); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint8_t mask() const { return mask_; }

    friend bool operator==(const PieceSet&, const PieceSet&) = default;

    std::string to_string() const;

private:
    std::uint8_t mask_ = 0;
};

struct Placement {
    ShapeKind shape = ShapeKind::LA;
    Cell anchor;

    std::array<Cell, 3> covered() const {
        const auto& off = shape_offsets(shape);
        return {anchor + off[0], anchor + off[1], anchor + off[2]};
    }

    friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct Tiling {
    std::vector<Placement> placements;

    std::size_t size() const { return placements.size(); }
    std::vector<Cell> covered_cells() const;  // sorted, not deduped
    void sort();
};

// Recognizes a 3-cell set as a placement, if it matches any shape.
std::optional<Placement> placement_from_cells(std::array<Cell, 3> cells);

// Placement mapped through a lattice transform; nullopt when the image is
// not one of the six shapes (shears can tear a tromino apart).
std::optional<Placement> transform_placement(const Placement& p, const Transform& t);

} // namespace trom
