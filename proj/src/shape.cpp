#include "trom/shape.hpp"

#include <algorithm>

namespace trom {

namespace {

// clang-format off
constexpr std::array<std::array<Cell, 3>, kShapeCount> kOffsets = {{
    {{{0, 0}, {0, 1}, {1, 1}}},  // L-A
    {{{0, 0}, {1, 0}, {1, 1}}},  // L-B
    {{{0, 1}, {1, 1}, {1, 0}}},  // L-C
    {{{0, 0}, {0, 1}, {1, 0}}},  // L-D
    {{{0, 0}, {1, 0}, {2, 0}}},  // I-H
    {{{0, 0}, {0, 1}, {0, 2}}},  // I-V
}};
// clang-format on

constexpr std::array<std::string_view, kShapeCount> kTags = {
    "L-A", "L-B", "L-C", "L-D", "I-H", "I-V",
};

} // namespace

const std::array<Cell, 3>& shape_offsets(ShapeKind k) {
    return kOffsets[static_cast<std::size_t>(k)];
}

std::string_view shape_tag(ShapeKind k) { return kTags[static_cast<std::size_t>(k)]; }

std::optional<ShapeKind> shape_from_tag(std::string_view tag) {
    for (int i = 0; i < kShapeCount; ++i)
        if (kTags[static_cast<std::size_t>(i)] == tag) return static_cast<ShapeKind>(i);
    return std::nullopt;
}

const PieceSet PieceSet::ALL_L{0b001111};
const PieceSet PieceSet::RIGHT_180{0b000011};
const PieceSet PieceSet::LEFT_180{0b001100};
const PieceSet PieceSet::I_ONLY{0b110000};
const PieceSet PieceSet::EVERYTHING{0b111111};

std::string PieceSet::to_string() const {
    std::string out;
    for (int i = 0; i < kShapeCount; ++i) {
        if (!contains(static_cast<ShapeKind>(i))) continue;
        if (!out.empty()) out += ',';
        out += kTags[static_cast<std::size_t>(i)];
    }
    return out.empty() ? "(empty)" : out;
}

std::vector<Cell> Tiling::covered_cells() const {
    std::vector<Cell> out;
    out.reserve(placements.size() * 3);
    for (const Placement& p : placements)
        for (Cell c : p.covered()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

void Tiling::sort() { std::sort(placements.begin(), placements.end()); }

std::optional<Placement> placement_from_cells(std::array<Cell, 3> cells) {
    std::sort(cells.begin(), cells.end());
    if (cells[0] == cells[1] || cells[1] == cells[2]) return std::nullopt;
    int mx = std::min({cells[0].x, cells[1].x, cells[2].x});
    int my = std::min({cells[0].y, cells[1].y, cells[2].y});
    std::array<Cell, 3> rel;
    for (int i = 0; i < 3; ++i) rel[static_cast<std::size_t>(i)] = {cells[static_cast<std::size_t>(i)].x - mx, cells[static_cast<std::size_t>(i)].y - my};
    for (int k = 0; k < kShapeCount; ++k) {
        auto off = kOffsets[static_cast<std::size_t>(k)];
        std::sort(off.begin(), off.end());
        if (off == rel) return Placement{static_cast<ShapeKind>(k), {mx, my}};
    }
    return std::nullopt;
}

std::optional<Placement> transform_placement(const Placement& p, const Transform& t) {
    auto cov = p.covered();
    for (Cell& c : cov) c = t.apply(c);
    return placement_from_cells(cov);
}

} // namespace trom
