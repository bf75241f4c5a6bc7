#include "trom/aztec.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "aztec_tables.hpp"
#include "trom/errors.hpp"
#include "trom/solver.hpp"

namespace trom {

namespace {

void check_spec(int a, int b) {
    if (a < 1 || b < a) throw InvalidSpec("aztec rectangle needs 1 <= a <= b");
}

} // namespace

std::pair<int, int> aztec_row_span(int a, int b, int y) {
    if (y < a) return {b - 1 - y, b + y};                  // widening bottom
    if (y < b) return {b - 1 - y, 2 * a - 1 - y + b};      // constant middle, drifts left
    return {y - b, 2 * a - 1 - y + b};                     // narrowing top
}

Region gen_aztec_rectangle(int a, int b) {
    check_spec(a, b);
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(2 * a * b + a + b));
    for (int y = 0; y < a + b; ++y) {
        auto [lo, hi] = aztec_row_span(a, b, y);
        for (int x = lo; x <= hi; ++x) cells.push_back({x, y});
    }
    return Region(std::move(cells));
}

Region gen_aztec_diamond(int n) {
    if (n < 1) throw InvalidSpec("diamond order must be at least 1");
    return gen_aztec_rectangle(n, n);
}

bool has_l_cover(int a, int b) {
    check_spec(a, b);
    return (2 * a * b + a + b) % 3 == 0;
}

namespace {

// Canonical stair (up_right): rows y = 0..3k+1 hold {(y,y),(y+1,y)}, except
// the top row keeps only its left cell.
std::vector<Cell> canonical_stair_cells(int k) {
    std::vector<Cell> cells;
    for (int y = 0; y <= 3 * k + 1; ++y) {
        cells.push_back({y, y});
        if (y < 3 * k + 1) cells.push_back({y + 1, y});
    }
    return normalize_cells(std::move(cells));
}

std::vector<Placement> canonical_stair_placements(int k) {
    std::vector<Placement> out;
    out.reserve(static_cast<std::size_t>(2 * k + 1));
    for (int j = 0; j < k; ++j) {
        out.push_back({ShapeKind::LB, {3 * j, 3 * j}});
        out.push_back({ShapeKind::LA, {3 * j + 2, 3 * j + 1}});
    }
    out.push_back({ShapeKind::LB, {3 * k, 3 * k}});
    return out;
}

Transform orientation_transform(StairOrientation o) {
    switch (o) {
    case StairOrientation::up_right: return Transform::translate(0, 0);
    case StairOrientation::up_right_flip: return Transform::rotate180();
    case StairOrientation::up_left: return Transform::reflect_x();
    case StairOrientation::up_left_flip: return Transform::reflect_y();
    }
    throw InvalidSpec("unknown stair orientation");
}

Cell min_corner(const std::vector<Cell>& cells) {
    int mx = std::numeric_limits<int>::max(), my = mx;
    for (Cell c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    return {mx, my};
}

std::vector<Placement> map_stair_placements(int k, const Transform& t, Cell shift) {
    // t is an involution, so it maps canonical coordinates back as well
    std::vector<Placement> out;
    for (const Placement& p : canonical_stair_placements(k)) {
        auto cov = p.covered();
        std::array<Cell, 3> img;
        for (std::size_t i = 0; i < 3; ++i) img[i] = t.apply(cov[i] + shift);
        auto q = placement_from_cells(img);
        if (!q) throw std::logic_error("stair transform tore a tromino");
        out.push_back(*q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Placement> build_stair(const StairSpec& spec, Cell anchor) {
    if (spec.k < 0) throw InvalidSpec("stair count must be nonnegative");
    Transform t = orientation_transform(spec.orientation);
    Cell lo = min_corner(apply_transform(canonical_stair_cells(spec.k), t));
    // want min corner at anchor: x -> t(x) + (anchor - lo), recast as t(x + shift)
    // does not commute with t, so translate after mapping instead
    std::vector<Placement> out;
    for (const Placement& p : canonical_stair_placements(spec.k)) {
        auto cov = p.covered();
        std::array<Cell, 3> img;
        for (std::size_t i = 0; i < 3; ++i)
            img[i] = t.apply(cov[i]) + (anchor - lo);
        auto q = placement_from_cells(img);
        if (!q) throw std::logic_error("stair transform tore a tromino");
        out.push_back(*q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Placement> tile_strip(const std::vector<Cell>& cells) {
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() % 6 != 3) throw InvalidSpec("strip cell count is not of the form 6k+3");
    int k = static_cast<int>((sorted.size() - 3) / 6);
    const auto canon = canonical_stair_cells(k);
    const Transform candidates[4] = {Transform::translate(0, 0), Transform::rotate180(),
                                     Transform::reflect_x(), Transform::reflect_y()};
    for (const Transform& t : candidates) {
        auto img = apply_transform(sorted, t);
        Cell lo = min_corner(img);
        for (Cell& c : img) c = c - lo;
        std::sort(img.begin(), img.end());
        if (img == canon) return map_stair_placements(k, t, lo);
    }
    throw InvalidSpec("cells do not form a stair in any orientation");
}

namespace {

Tiling translated(Tiling t, int dx, int dy) {
    for (Placement& p : t.placements) p.anchor = {p.anchor.x + dx, p.anchor.y + dy};
    return t;
}

void append_placements(Tiling& t, const std::vector<Placement>& ps, int dx = 0, int dy = 0) {
    for (Placement p : ps) {
        p.anchor = {p.anchor.x + dx, p.anchor.y + dy};
        t.placements.push_back(p);
    }
}

Tiling tile_aztec_impl(int a, int b);

// Stored small-a tiling, stretched along b in steps of 3: each step shoves
// the old tiling 3 to the right and fills the slanted gap with the delta
// band for this a.
Tiling tile_base_band(int a, int b) {
    const auto& diamond = (a == 2) ? tables::ad2() : tables::ad3();
    const auto& plus3 = (a == 2) ? tables::ar2x5() : tables::ar3x6();
    const auto& delta = (a == 2) ? tables::delta2() : tables::delta3();
    Tiling t;
    int cur = a;
    if (b == a) {
        t.placements = diamond;
    } else {
        t.placements = plus3;
        cur = a + 3;
    }
    while (cur < b) {
        t = translated(std::move(t), 3, 0);
        append_placements(t, delta, 0, cur);
        cur += 3;
    }
    return t;
}

// Border ring of four stairs around AR(a-2,b-2); needs a ≡ 2 (mod 3), a ≥ 5.
Tiling grow_by_two(int a, int b) {
    Tiling t = translated(tile_aztec_impl(a - 2, b - 2), 2, 2);

    std::vector<Cell> se{{b, 0}}, sw{{b - 1, 0}}, ne, nw;
    for (int y = 1; y <= a - 1; ++y) {
        se.push_back({b + y - 1, y});
        se.push_back({b + y, y});
    }
    for (int y = 1; y <= b - 1; ++y) {
        sw.push_back({b - y - 1, y});
        sw.push_back({b - y, y});
    }
    for (int y = a; y <= a + b - 2; ++y) {
        ne.push_back({2 * a - 2 - y + b, y});
        ne.push_back({2 * a - 1 - y + b, y});
    }
    ne.push_back({a, a + b - 1});
    for (int y = b; y <= a + b - 2; ++y) {
        nw.push_back({y - b, y});
        nw.push_back({y - b + 1, y});
    }
    nw.push_back({a - 1, a + b - 1});

    for (const auto* s : {&se, &sw, &ne, &nw}) append_placements(t, tile_strip(*s));
    return t;
}

// Border ring of four 2-diamonds in the corners plus eight stairs around
// AR(a-4,b-4); needs a ≡ 0 (mod 3), a ≥ 6.
Tiling grow_by_four(int a, int b) {
    Tiling t = translated(tile_aztec_impl(a - 4, b - 4), 4, 4);

    const struct {
        int dx, dy;
    } corners[4] = {{b - 2, 0}, {a - 2, a + b - 4}, {0, b - 2}, {a + b - 4, a - 2}};
    for (const auto& c : corners) append_placements(t, tables::ad2(), c.dx, c.dy);

    std::vector<Cell> se_outer{{b + 2, 2}}, se_inner{{b + 1, 3}};
    std::vector<Cell> sw_outer{{b - 3, 2}}, sw_inner{{b - 2, 3}};
    for (int y = 3; y <= a - 3; ++y) {
        se_outer.push_back({b + y - 1, y});
        se_outer.push_back({b + y, y});
    }
    for (int y = 4; y <= a - 2; ++y) {
        se_inner.push_back({b + y - 3, y});
        se_inner.push_back({b + y - 2, y});
    }
    for (int y = 3; y <= b - 3; ++y) {
        sw_outer.push_back({b - y - 1, y});
        sw_outer.push_back({b - y, y});
    }
    for (int y = 4; y <= b - 2; ++y) {
        sw_inner.push_back({b - y + 1, y});
        sw_inner.push_back({b - y + 2, y});
    }
    auto mirrored = [&](const std::vector<Cell>& v) {
        std::vector<Cell> out;
        out.reserve(v.size());
        for (Cell c : v) out.push_back({a + b - 1 - c.x, a + b - 1 - c.y});
        return out;
    };
    const std::vector<Cell> stairs[8] = {se_outer,
                                         se_inner,
                                         sw_outer,
                                         sw_inner,
                                         mirrored(se_outer),
                                         mirrored(se_inner),
                                         mirrored(sw_outer),
                                         mirrored(sw_inner)};
    for (const auto& s : stairs) append_placements(t, tile_strip(s));
    return t;
}

Tiling tile_aztec_impl(int a, int b) {
    if (a == 2 || a == 3) return tile_base_band(a, b);
    if (a % 3 == 2) return grow_by_two(a, b);
    return grow_by_four(a, b);
}

} // namespace

Tiling tile_aztec(int a, int b) {
    if (!has_l_cover(a, b))
        throw NoCover("no L-cover exists: 2ab+a+b is not divisible by 3");
    Tiling t = tile_aztec_impl(a, b);
    t.sort();
    auto report = validate_tiling(gen_aztec_rectangle(a, b), t);
    if (!report.ok) throw std::logic_error("rectangle tiler produced an invalid cover: " + report.violation);
    return t;
}

Tiling tile_aztec_one_defect(int a, int b, Cell defect) {
    check_spec(a, b);
    if (a % 3 != 1 || b % 3 != 1)
        throw InvalidSpec("one-defect tiler needs a and b congruent to 1 mod 3");
    Region ar = gen_aztec_rectangle(a, b);
    if (!ar.contains(defect)) throw DefectOutside("defect lies outside the rectangle");

    // bucket the band by diagonals d = x - y; d runs -b..b
    std::vector<std::vector<Cell>> diag(static_cast<std::size_t>(2 * b + 1));
    for (Cell c : ar.cells()) diag[static_cast<std::size_t>(c.x - c.y + b)].push_back(c);

    // center the fringe on a long diagonal (parity different from b) at or
    // next to the defect
    int dd = defect.x - defect.y;
    int d0;
    if ((dd & 1) != (b & 1)) d0 = dd;
    else d0 = (dd == b) ? b - 1 : dd + 1;

    std::vector<Cell> fringe;
    for (int d = d0 - 1; d <= d0 + 1; ++d) {
        const auto& v = diag[static_cast<std::size_t>(d + b)];
        fringe.insert(fringe.end(), v.begin(), v.end());
    }
    Region punctured(fringe, {defect});
    auto sol = solve(punctured, PieceSet::ALL_L);
    if (!sol.covered()) throw NoCover("fringe with one defect has no L-cover");
    Tiling t = *sol.tiling;

    // everything else pairs into diagonal strips, each a stair
    auto add_strip = [&](int d) {
        std::vector<Cell> strip = diag[static_cast<std::size_t>(d + b)];
        const auto& hi = diag[static_cast<std::size_t>(d + 1 + b)];
        strip.insert(strip.end(), hi.begin(), hi.end());
        append_placements(t, tile_strip(strip));
    };
    for (int d = d0 + 2; d + 1 <= b; d += 2) add_strip(d);
    for (int d = d0 - 3; d >= -b; d -= 2) add_strip(d);

    t.sort();
    auto report = validate_tiling(Region(ar.cells(), {defect}), t);
    if (!report.ok)
        throw std::logic_error("one-defect tiler produced an invalid cover: " + report.violation);
    return t;
}

std::vector<Cell> delta_band_cells(int a) {
    if (a != 2 && a != 3) throw InvalidSpec("delta band is defined for a in {2, 3}");
    std::vector<Cell> cells;
    for (int t = 0; t < a + 3; ++t) {
        int lo = std::max(-t - 1, t - 6);
        int hi = std::min(t - 1, 2 * a - 1 - t);
        for (int u = lo; u <= hi; ++u) cells.push_back({u + 3, t});
    }
    return cells;
}

AztecEmbedding embed_in_aztec(const Region& r) {
    Region norm = r.normalized();
    int w = 0, h = 0;
    for (Cell c : norm.cells()) {
        w = std::max(w, c.x + 1);
        h = std::max(h, c.y + 1);
    }

    struct Fit {
        long cells = 0;
        int a = 0, b = 0, x0 = 0, y0 = 0;
    };
    std::optional<Fit> best;
    int cap = w + h + 9;
    for (int a = 1; a <= cap; ++a) {
        for (int b = a; b <= cap; ++b) {
            if (!has_l_cover(a, b)) continue;
            long cells = 2L * a * b + a + b;
            if (best && cells >= best->cells) continue;  // only improvements matter
            for (int y0 = 0; y0 + h <= a + b; ++y0) {
                int lo = std::numeric_limits<int>::min(), hi = std::numeric_limits<int>::max();
                for (int y = y0; y < y0 + h; ++y) {
                    auto [l, r2] = aztec_row_span(a, b, y);
                    lo = std::max(lo, l);
                    hi = std::min(hi, r2);
                }
                if (hi - lo + 1 >= w) {
                    best = Fit{cells, a, b, lo, y0};
                    break;
                }
            }
        }
    }
    if (!best) throw std::logic_error("no aztec rectangle fits the region");

    Cell base = min_corner(r.cells());
    Cell offset{best->x0 - base.x, best->y0 - base.y};
    Region band = gen_aztec_rectangle(best->a, best->b);
    std::vector<Cell> inside;
    for (Cell c : r.cells()) inside.push_back(c + offset);
    std::sort(inside.begin(), inside.end());
    std::vector<Cell> defects;
    for (Cell c : band.cells())
        if (!std::binary_search(inside.begin(), inside.end(), c)) defects.push_back(c);
    for (Cell c : r.defects()) defects.push_back(c + offset);
    return {{best->a, best->b}, offset, Region(band.cells(), std::move(defects))};
}

} // namespace trom
