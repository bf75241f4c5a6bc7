#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "trom/aztec.hpp"
#include "trom/boxplus.hpp"
#include "trom/errors.hpp"
#include "trom/render.hpp"
#include "trom/sampler.hpp"
#include "trom/solver.hpp"
#include "trom/tiling_io.hpp"
#include "trom/tromino180.hpp"

using namespace trom;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write " + path);
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        spill(path, text);
}

Region load_region(const std::string& path) { return parse_region(slurp(path)); }

PieceSet pieces_from_name(const std::string& name) {
    if (name == "l") return PieceSet::ALL_L;
    if (name == "l180r") return PieceSet::RIGHT_180;
    if (name == "l180l") return PieceSet::LEFT_180;
    if (name == "i") return PieceSet::I_ONLY;
    return PieceSet::EVERYTHING;
}

// Recognize a (possibly translated) generated band by shape; defects are
// reported in generator coordinates.
struct AztecMatch {
    int a = 0, b = 0;
    Cell offset;
    std::vector<Cell> defects;
};

std::optional<AztecMatch> match_aztec(const Region& r) {
    const auto& cells = r.cells();
    if (cells.empty()) return std::nullopt;
    int miny = cells[0].y, maxy = cells[0].y;
    for (const Cell& c : cells) {
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    int rows = maxy - miny + 1;
    for (int a = 1; a < rows; ++a) {
        int b = rows - a;
        if (b < a) break;
        if (static_cast<std::size_t>(2 * a * b + a + b) != cells.size()) continue;
        Region g = gen_aztec_rectangle(a, b);
        Cell off = cells.front() - g.cells().front();
        bool same = true;
        for (std::size_t i = 0; i < cells.size() && same; ++i)
            same = g.cells()[i] + off == cells[i];
        if (!same) continue;
        AztecMatch m{a, b, off, {}};
        for (const Cell& d : r.defects()) m.defects.push_back(d - off);
        return m;
    }
    return std::nullopt;
}

int report_uncoverable() {
    std::cout << "uncoverable\n";
    return 1;
}

int output_cover(const Region& r, const Tiling& t, const std::string& out_path,
                 const std::string& render_fmt) {
    auto rep = validate_tiling(r, t);
    if (!rep.ok) throw std::logic_error("produced tiling failed validation: " + rep.violation);
    std::cout << t.size() << " placements\n";
    if (!out_path.empty()) spill(out_path, tiling_to_json(t));
    if (render_fmt == "ascii")
        std::cout << render_ascii(r, t);
    else if (render_fmt == "svg")
        std::cout << render_svg(r, t);
    else if (render_fmt == "json")
        std::cout << tiling_to_json(t);
    return 0;
}

int cmd_gen(const Region& r, const std::string& out) {
    std::cout << r.size() << " cells\n";
    emit(out, serialize_region(r));
    return 0;
}

int cmd_tile(const std::string& region_path, const std::string& pieces_name,
             const std::string& strategy, const std::string& out_path,
             const std::string& render_fmt, std::uint64_t budget) {
    Region r = load_region(region_path);
    PieceSet ps = pieces_from_name(pieces_name);
    SolverOptions opt{budget};

    if (r.free_size() % 3 != 0) return report_uncoverable();

    auto m = match_aztec(r);
    bool l_pieces = ps == PieceSet::ALL_L || ps == PieceSet::EVERYTHING;

    // constructive route: exact band, or band with one defect in the solved
    // residue class
    auto constructive = [&]() -> std::optional<int> {
        if (!m || !l_pieces) return std::nullopt;
        if (m->defects.empty() && has_l_cover(m->a, m->b)) {
            Tiling t = tile_aztec(m->a, m->b);
            for (auto& p : t.placements) p.anchor = p.anchor + m->offset;
            return output_cover(r, t, out_path, render_fmt);
        }
        if (m->defects.size() == 1 && m->a % 3 == 1 && m->b % 3 == 1) {
            Tiling t = tile_aztec_one_defect(m->a, m->b, m->defects[0]);
            for (auto& p : t.placements) p.anchor = p.anchor + m->offset;
            return output_cover(r, t, out_path, render_fmt);
        }
        return std::nullopt;
    };

    if (strategy == "constructive") {
        if (auto rc = constructive()) return *rc;
        std::cerr << "constructive strategy needs a band instance (optionally one defect) "
                     "and L pieces\n";
        return 2;
    }
    if (strategy == "auto") {
        if (auto rc = constructive()) return *rc;
        if (ps == PieceSet::RIGHT_180 || ps == PieceSet::LEFT_180) {
            Decision180 d =
                ps == PieceSet::RIGHT_180 ? decide_180_cover(r, opt) : decide_180_cover_left(r, opt);
            if (!d.covered) return report_uncoverable();
            return output_cover(r, *d.witness, out_path, render_fmt);
        }
    }
    SolveResult res = solve(r, ps, opt);
    if (!res.covered()) return report_uncoverable();
    return output_cover(r, *res.tiling, out_path, render_fmt);
}

int cmd_count(const std::string& region_path, const std::string& pieces_name,
              std::uint64_t budget) {
    Region r = load_region(region_path);
    SolverOptions opt{budget};
    std::cout << count(r, pieces_from_name(pieces_name), opt).count << "\n";
    return 0;
}

int cmd_check(const std::string& region_path, const std::string& what) {
    Region r = load_region(region_path);
    if (what == "forbidden") {
        auto occ = detect_forbidden(r);
        if (occ.empty()) {
            std::cout << "forbidden: none\n";
        } else {
            std::cout << "forbidden: " << occ.size() << "\n";
            for (const auto& o : occ) {
                std::cout << "  class " << o.class_id << ":";
                for (const Cell& c : o.cells) std::cout << " (" << c.x << "," << c.y << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (what == "detachable") {
        if (!is_detachable(r)) {
            std::cout << "detachable: no\n";
            return 0;
        }
        auto cut = find_detaching_cut(build_adjacency_graph(r));
        std::cout << "detachable: yes (" << cut.parts[0].size() << " + " << cut.parts[1].size()
                  << " cells across " << cut.edges.size() << " edges)\n";
        return 0;
    }
    auto ig = build_intersection_graph(build_region_graph(r));
    auto claw = find_claw(ig);
    if (!claw) {
        std::cout << "claw: none\n";
    } else {
        std::cout << "claw: center " << claw->center << " leaves " << claw->leaves[0] << " "
                  << claw->leaves[1] << " " << claw->leaves[2] << "\n";
    }
    return 0;
}

int cmd_boxplus(const std::string& region_path, const std::string& out_region,
                const std::string& out_tiling) {
    Region r = load_region(region_path);
    Tiling t;
    try {
        t = tile_boxplus(r);
    } catch (const SizeNotDivisible&) {
        return report_uncoverable();
    }
    Region blown = subdivide_boxplus(r);
    std::cout << t.size() << " placements\n";
    if (!out_region.empty()) spill(out_region, serialize_region(blown));
    if (!out_tiling.empty()) spill(out_tiling, tiling_to_json(t));
    if (out_region.empty() && out_tiling.empty()) std::cout << render_ascii(blown, t);
    return 0;
}

int cmd_render(const std::string& region_path, const std::string& tiling_path,
               const std::string& fmt, const std::string& out) {
    Region r = load_region(region_path);
    std::optional<Tiling> t;
    if (!tiling_path.empty()) {
        t = tiling_from_json(slurp(tiling_path));
        auto rep = validate_tiling(r, *t);
        if (!rep.ok) {
            std::cerr << "invalid tiling: " << rep.violation << "\n";
            return 2;
        }
    }
    std::string text;
    if (fmt == "ascii") {
        text = t ? render_ascii(r, *t) : render_ascii(r);
    } else if (fmt == "svg") {
        text = t ? render_svg(r, *t) : render_svg(r);
    } else {
        if (!t) {
            std::cerr << "json format needs --tiling\n";
            return 2;
        }
        text = tiling_to_json(*t);
    }
    emit(out, text);
    return 0;
}

int cmd_embed(const std::string& region_path, const std::string& out) {
    Region r = load_region(region_path);
    auto emb = embed_in_aztec(r);
    std::cout << "a=" << emb.spec.a << " b=" << emb.spec.b << " offset=" << emb.offset.x << ","
              << emb.offset.y << " defects=" << emb.embedded.defects().size() << "\n";
    emit(out, serialize_region(emb.embedded));
    return 0;
}

int cmd_validate(const std::string& region_path, const std::string& tiling_path) {
    Region r = load_region(region_path);
    if (tiling_path.empty()) {
        std::cout << "region ok: " << r.size() << " cells, " << r.defects().size()
                  << " defects\n";
        return 0;
    }
    Tiling t = tiling_from_json(slurp(tiling_path));
    auto rep = validate_tiling(r, t);
    if (!rep.ok) {
        std::cerr << "invalid: " << rep.violation << "\n";
        return 2;
    }
    std::cout << "valid: " << t.size() << " placements\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"L-tromino tiling workbench: generators, tilers, deciders, renderers"};
    app.require_subcommand(1);

    std::string region_path, tiling_path, out_path;
    std::string pieces = "l", strategy = "auto", fmt = "ascii", what;
    std::uint64_t budget = SolverOptions{}.node_budget;
    std::uint64_t seed = 1;
    int ga = 0, gb = 0, gn = 0, rnd_cells = 0, rnd_defects = 0;

    auto piece_names = CLI::IsMember({"l", "l180r", "l180l", "i", "all"});

    auto* gen = app.add_subcommand("gen", "generate a region file");
    gen->require_subcommand(1);
    auto* gen_rect = gen->add_subcommand("aztec-rect", "staircase band, sides a <= b");
    gen_rect->add_option("a", ga, "short side")->required();
    gen_rect->add_option("b", gb, "long side")->required();
    gen_rect->add_option("-o,--output", out_path, "write here instead of stdout");
    auto* gen_diamond = gen->add_subcommand("aztec-diamond", "band with equal sides");
    gen_diamond->add_option("n", gn, "order")->required();
    gen_diamond->add_option("-o,--output", out_path, "write here instead of stdout");
    auto* gen_random = gen->add_subcommand("random", "seeded random connected region");
    gen_random->add_option("cells", rnd_cells, "cell count")->required()
        ->check(CLI::PositiveNumber);
    gen_random->add_option("--defects", rnd_defects, "defect count")
        ->check(CLI::NonNegativeNumber);
    gen_random->add_option("--seed", seed, "rng seed");
    gen_random->add_option("-o,--output", out_path, "write here instead of stdout");

    auto* tile = app.add_subcommand("tile", "find a complete cover");
    tile->add_option("region", region_path, "region file")->required();
    tile->add_option("-p,--pieces", pieces, "piece set")->check(piece_names);
    tile->add_option("-s,--strategy", strategy, "route")
        ->check(CLI::IsMember({"auto", "constructive", "oracle"}));
    tile->add_option("-o,--output", out_path, "tiling file to write");
    std::string tile_render;
    tile->add_option("--render", tile_render, "also print a render")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    tile->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);

    auto* cnt = app.add_subcommand("count", "count all covers");
    cnt->add_option("region", region_path, "region file")->required();
    cnt->add_option("-p,--pieces", pieces, "piece set")->check(piece_names);
    cnt->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);

    auto* chk = app.add_subcommand("check", "structure reports");
    chk->add_option("region", region_path, "region file")->required();
    chk->add_option("-w,--what", what, "forbidden | detachable | claw")
        ->required()
        ->check(CLI::IsMember({"forbidden", "detachable", "claw"}));

    auto* bp = app.add_subcommand("boxplus", "subdivide every cell 2x2 and tile with Ls");
    bp->add_option("region", region_path, "region file")->required();
    bp->add_option("-o,--output", out_path, "write the subdivided region here");
    bp->add_option("--tiling", tiling_path, "write the tiling here");

    auto* rnd = app.add_subcommand("render", "draw a region or a tiling");
    rnd->add_option("region", region_path, "region file")->required();
    rnd->add_option("--tiling", tiling_path, "tiling file");
    rnd->add_option("-f,--format", fmt, "ascii | svg | json")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    rnd->add_option("-o,--output", out_path, "write here instead of stdout");

    auto* emb = app.add_subcommand("embed", "wrap a region into a band with defects");
    emb->add_option("region", region_path, "region file")->required();
    emb->add_option("-o,--output", out_path, "write here instead of stdout");

    auto* val = app.add_subcommand("validate", "re-check files");
    val->add_option("region", region_path, "region file")->required();
    val->add_option("--tiling", tiling_path, "tiling file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen_rect->parsed()) return cmd_gen(gen_aztec_rectangle(ga, gb), out_path);
        if (gen_diamond->parsed()) return cmd_gen(gen_aztec_diamond(gn), out_path);
        if (gen_random->parsed()) {
            std::mt19937_64 rng(seed);
            return cmd_gen(random_region(rng, rnd_cells, rnd_defects), out_path);
        }
        if (tile->parsed())
            return cmd_tile(region_path, pieces, strategy, out_path, tile_render, budget);
        if (cnt->parsed()) return cmd_count(region_path, pieces, budget);
        if (chk->parsed()) return cmd_check(region_path, what);
        if (bp->parsed()) return cmd_boxplus(region_path, out_path, tiling_path);
        if (rnd->parsed()) return cmd_render(region_path, tiling_path, fmt, out_path);
        if (emb->parsed()) return cmd_embed(region_path, out_path);
        if (val->parsed()) return cmd_validate(region_path, tiling_path);
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const NoCover&) {
        return report_uncoverable();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
