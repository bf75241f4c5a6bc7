// Regenerates src/aztec_tables.cpp: solves the small rectangle cases and the
// delta extension bands once with the exact solver and prints them as
// literal placement tables.  Usage: ./make_tables > src/aztec_tables.cpp
#include <cstdio>
#include <cstdlib>

#include "trom/aztec.hpp"
#include "trom/solver.hpp"

using namespace trom;

namespace {

const char* kind_id(ShapeKind k) {
    switch (k) {
    case ShapeKind::LA: return "LA";
    case ShapeKind::LB: return "LB";
    case ShapeKind::LC: return "LC";
    case ShapeKind::LD: return "LD";
    case ShapeKind::IH: return "IH";
    case ShapeKind::IV: return "IV";
    }
    return "??";
}

void emit(const char* name, const char* what, const Region& region) {
    auto res = solve(region, PieceSet::ALL_L);
    if (!res.covered()) {
        std::fprintf(stderr, "no L-cover found for %s\n", name);
        std::exit(1);
    }
    auto check = validate_tiling(region, *res.tiling);
    if (!check.ok) {
        std::fprintf(stderr, "invalid table for %s: %s\n", name, check.violation.c_str());
        std::exit(1);
    }
    std::printf("// %s\n", what);
    std::printf("const std::vector<Placement>& %s() {\n", name);
    std::printf("    static const std::vector<Placement> v = {\n");
    for (const Placement& p : res.tiling->placements)
        std::printf("        {ShapeKind::%s, {%d, %d}},\n", kind_id(p.shape), p.anchor.x,
                    p.anchor.y);
    std::printf("    };\n    return v;\n}\n\n");
}

} // namespace

int main() {
    std::printf("// Generated by tools/make_tables.cpp. Do not edit by hand.\n");
    std::printf("#include \"aztec_tables.hpp\"\n\n");
    std::printf("namespace trom::tables {\n\n");
    emit("ad2", "AR(2,2): 12 cells, 4 trominoes", gen_aztec_rectangle(2, 2));
    emit("ar2x5", "AR(2,5): 27 cells, 9 trominoes", gen_aztec_rectangle(2, 5));
    emit("ad3", "AR(3,3): 24 cells, 8 trominoes", gen_aztec_rectangle(3, 3));
    emit("ar3x6", "AR(3,6): 45 cells, 15 trominoes", gen_aztec_rectangle(3, 6));
    emit("delta2", "b -> b+3 band for a=2: 15 cells", Region(delta_band_cells(2)));
    emit("delta3", "b -> b+3 band for a=3: 21 cells", Region(delta_band_cells(3)));
    std::printf("} // namespace trom::tables\n");
    return 0;
}
