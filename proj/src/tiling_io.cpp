#include "trom/tiling_io.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "trom/errors.hpp"

namespace trom {

using nlohmann::json;

std::string tiling_to_json(const Tiling& t) {
    json arr = json::array();
    for (const Placement& p : t.placements) {
        json jp;
        jp["shape"] = std::string(shape_tag(p.shape));
        jp["anchor"] = {p.anchor.x, p.anchor.y};
        json cells = json::array();
        for (const Cell& c : p.covered()) cells.push_back({c.x, c.y});
        jp["cells"] = std::move(cells);
        arr.push_back(std::move(jp));
    }
    return arr.dump(2) + "\n";
}

Tiling tiling_from_json(std::string_view text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(std::string("tiling json: ") + e.what());
    }
    if (!arr.is_array()) throw SyntaxError("tiling json: expected a top-level array");

    Tiling t;
    for (const json& jp : arr) {
        if (!jp.is_object() || !jp.contains("shape") || !jp.contains("anchor"))
            throw SyntaxError("tiling json: each entry needs shape and anchor");
        if (!jp["shape"].is_string())
            throw SyntaxError("tiling json: shape must be a string tag");
        auto kind = shape_from_tag(jp["shape"].get<std::string>());
        if (!kind) throw SyntaxError("tiling json: unknown shape " + jp["shape"].dump());
        const json& ja = jp["anchor"];
        if (!ja.is_array() || ja.size() != 2 || !ja[0].is_number_integer() ||
            !ja[1].is_number_integer())
            throw SyntaxError("tiling json: anchor must be [x, y]");
        Placement p{*kind, Cell{ja[0].get<int>(), ja[1].get<int>()}};
        if (jp.contains("cells")) {
            const json& jc = jp["cells"];
            if (!jc.is_array() || jc.size() != 3)
                throw SyntaxError("tiling json: cells must list three pairs");
            std::array<Cell, 3> given{};
            for (std::size_t i = 0; i < 3; ++i) {
                if (!jc[i].is_array() || jc[i].size() != 2)
                    throw SyntaxError("tiling json: cells must list three pairs");
                given[i] = Cell{jc[i][0].get<int>(), jc[i][1].get<int>()};
            }
            auto cov = p.covered();
            std::sort(given.begin(), given.end());
            std::sort(cov.begin(), cov.end());
            if (given != cov)
                throw SyntaxError("tiling json: cells disagree with shape and anchor");
        }
        t.placements.push_back(p);
    }
    return t;
}

} // namespace trom
