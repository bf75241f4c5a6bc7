#include "trom/render.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trom {

namespace {

// A-Z minus X, so a cycled letter can never look like a defect.
const char kLetters[] = "ABCDEFGHIJKLMNOPQRSTUVWYZ";
constexpr int kLetterCount = 25;

const char* kPalette[] = {"#8dd3c7", "#ffd92f", "#bebada", "#fb8072",
                          "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
constexpr int kPaletteCount = 8;

struct Box {
    int minx = 0, miny = 0, maxx = -1, maxy = -1;
};

Box bounding(const Region& r) {
    Box b;
    bool first = true;
    for (const Cell& c : r.cells()) {
        if (first) {
            b = {c.x, c.y, c.x, c.y};
            first = false;
        } else {
            b.minx = std::min(b.minx, c.x);
            b.miny = std::min(b.miny, c.y);
            b.maxx = std::max(b.maxx, c.x);
            b.maxy = std::max(b.maxy, c.y);
        }
    }
    return b;
}

std::map<Cell, int> owner_index(const Tiling* t) {
    std::map<Cell, int> own;
    if (t)
        for (std::size_t i = 0; i < t->placements.size(); ++i)
            for (const Cell& c : t->placements[i].covered()) own[c] = static_cast<int>(i);
    return own;
}

std::string ascii_impl(const Region& r, const Tiling* t) {
    if (r.cells().empty()) return "";
    Box b = bounding(r);
    auto own = owner_index(t);
    std::string out;
    for (int y = b.maxy; y >= b.miny; --y) {
        std::string line;
        for (int x = b.minx; x <= b.maxx; ++x) {
            Cell c{x, y};
            if (!r.contains(c)) {
                line += ' ';
            } else if (r.is_defect(c)) {
                line += 'X';
            } else if (auto it = own.find(c); it != own.end()) {
                line += kLetters[it->second % kLetterCount];
            } else {
                line += '.';
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string svg_impl(const Region& r, const Tiling* t) {
    constexpr int U = 24, pad = 4;
    Box b = bounding(r);
    int w = r.cells().empty() ? 1 : (b.maxx - b.minx + 1) * U + 2 * pad;
    int h = r.cells().empty() ? 1 : (b.maxy - b.miny + 1) * U + 2 * pad;
    auto sx = [&](int x) { return pad + (x - b.minx) * U; };
    auto sy = [&](int y) { return pad + (b.maxy - y) * U; };
    auto own = owner_index(t);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\">\n";
    for (const Cell& c : r.cells()) {
        std::string fill = "#f4f4f4";
        if (r.is_defect(c))
            fill = "#5b5b5b";
        else if (auto it = own.find(c); it != own.end())
            fill = kPalette[it->second % kPaletteCount];
        out += "<rect x=\"" + std::to_string(sx(c.x)) + "\" y=\"" + std::to_string(sy(c.y)) +
               "\" width=\"" + std::to_string(U) + "\" height=\"" + std::to_string(U) +
               "\" fill=\"" + fill + "\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
        if (r.is_defect(c)) {
            int x0 = sx(c.x), y0 = sy(c.y);
            out += "<path d=\"M" + std::to_string(x0 + 5) + " " + std::to_string(y0 + 5) + "L" +
                   std::to_string(x0 + U - 5) + " " + std::to_string(y0 + U - 5) + "M" +
                   std::to_string(x0 + U - 5) + " " + std::to_string(y0 + 5) + "L" +
                   std::to_string(x0 + 5) + " " + std::to_string(y0 + U - 5) +
                   "\" stroke=\"#ffffff\" stroke-width=\"2\"/>\n";
        }
    }
    if (t) {
        // heavy outline: every cell edge not shared within the same piece
        for (const Placement& p : t->placements) {
            auto cov = p.covered();
            auto inside = [&](Cell c) { return std::find(cov.begin(), cov.end(), c) != cov.end(); };
            for (const Cell& c : cov) {
                int x0 = sx(c.x), y0 = sy(c.y);
                if (!inside({c.x, c.y + 1}))
                    out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
                           "\" x2=\"" + std::to_string(x0 + U) + "\" y2=\"" + std::to_string(y0) +
                           "\" stroke=\"#303030\" stroke-width=\"2\"/>\n";
                if (!inside({c.x, c.y - 1}))
                    out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" +
                           std::to_string(y0 + U) + "\" x2=\"" + std::to_string(x0 + U) +
                           "\" y2=\"" + std::to_string(y0 + U) + "\" stroke=\"#303030\" stroke-width=\"2\"/>\n";
                if (!inside({c.x - 1, c.y}))
                    out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
                           "\" x2=\"" + std::to_string(x0) + "\" y2=\"" + std::to_string(y0 + U) +
                           "\" stroke=\"#303030\" stroke-width=\"2\"/>\n";
                if (!inside({c.x + 1, c.y}))
                    out += "<line x1=\"" + std::to_string(x0 + U) + "\" y1=\"" +
                           std::to_string(y0) + "\" x2=\"" + std::to_string(x0 + U) + "\" y2=\"" +
                           std::to_string(y0 + U) + "\" stroke=\"#303030\" stroke-width=\"2\"/>\n";
            }
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace

std::string render_ascii(const Region& r) { return ascii_impl(r, nullptr); }
std::string render_ascii(const Region& r, const Tiling& t) { return ascii_impl(r, &t); }
std::string render_svg(const Region& r) { return svg_impl(r, nullptr); }
std::string render_svg(const Region& r, const Tiling& t) { return svg_impl(r, &t); }

} // namespace trom
