#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace trom {

// A cell is the unit square whose lower-left corner is (x, y).
struct Cell {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;

    Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
    Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
};

// Lattice maps used for shape bookkeeping.  shear_x slides rows, shear_y
// slides columns; every kind is a bijection of the lattice.
struct Transform {
    enum class Kind { rotate180, reflect_x, reflect_y, shear_x, shear_y, translate };

    Kind kind = Kind::translate;
    int s = 0;  // shear step (expected +1 or -1)
    int dx = 0, dy = 0;

    static Transform rotate180() { return {Kind::rotate180, 0, 0, 0}; }
    static Transform reflect_x() { return {Kind::reflect_x, 0, 0, 0}; }
    static Transform reflect_y() { return {Kind::reflect_y, 0, 0, 0}; }
    static Transform shear_x(int step) { return {Kind::shear_x, step, 0, 0}; }
    static Transform shear_y(int step) { return {Kind::shear_y, step, 0, 0}; }
    static Transform translate(int dx, int dy) { return {Kind::translate, 0, dx, dy}; }

    Cell apply(Cell c) const {
        switch (kind) {
        case Kind::rotate180: return {-c.x, -c.y};
        case Kind::reflect_x: return {-c.x, c.y};
        case Kind::reflect_y: return {c.x, -c.y};
        case Kind::shear_x: return {c.x + s * c.y, c.y};
        case Kind::shear_y: return {c.x, c.y + s * c.x};
        case Kind::translate: return {c.x + dx, c.y + dy};
        }
        return c;
    }
};

std::vector<Cell> apply_transform(const std::vector<Cell>& cells, const Transform& t);

// Translates so min x = min y = 0.  Sorts and dedupes as a side effect.
std::vector<Cell> normalize_cells(std::vector<Cell> cells);

bool edge_connected(const std::vector<Cell>& cells);  // 4-neighbour connectivity

} // namespace trom

template <>
struct std::hash<trom::Cell> {
    std::size_t operator()(const trom::Cell& c) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) ^
            static_cast<std::uint32_t>(c.y));
    }
};
