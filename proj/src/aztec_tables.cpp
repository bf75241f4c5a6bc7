// Generated by tools/make_tables.cpp. Do not edit by hand.
#include "aztec_tables.hpp"

namespace trom::tables {

// AR(2,2): 12 cells, 4 trominoes
const std::vector<Placement>& ad2() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {2, 0}},
        {ShapeKind::LB, {0, 2}},
        {ShapeKind::LC, {0, 0}},
        {ShapeKind::LD, {2, 2}},
    };
    return v;
}

// AR(2,5): 27 cells, 9 trominoes
const std::vector<Placement>& ar2x5() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {2, 3}},
        {ShapeKind::LB, {0, 5}},
        {ShapeKind::LB, {3, 3}},
        {ShapeKind::LB, {4, 2}},
        {ShapeKind::LB, {5, 1}},
        {ShapeKind::LC, {0, 3}},
        {ShapeKind::LC, {2, 1}},
        {ShapeKind::LD, {2, 5}},
        {ShapeKind::LD, {4, 0}},
    };
    return v;
}

// AR(3,3): 24 cells, 8 trominoes
const std::vector<Placement>& ad3() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {2, 1}},
        {ShapeKind::LA, {2, 4}},
        {ShapeKind::LA, {4, 1}},
        {ShapeKind::LB, {0, 3}},
        {ShapeKind::LB, {2, 0}},
        {ShapeKind::LB, {2, 3}},
        {ShapeKind::LC, {0, 1}},
        {ShapeKind::LD, {4, 3}},
    };
    return v;
}

// AR(3,6): 45 cells, 15 trominoes
const std::vector<Placement>& ar3x6() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {2, 4}},
        {ShapeKind::LA, {2, 7}},
        {ShapeKind::LA, {6, 0}},
        {ShapeKind::LA, {6, 2}},
        {ShapeKind::LB, {0, 6}},
        {ShapeKind::LB, {2, 6}},
        {ShapeKind::LB, {4, 2}},
        {ShapeKind::LB, {7, 2}},
        {ShapeKind::LC, {0, 4}},
        {ShapeKind::LC, {2, 2}},
        {ShapeKind::LC, {3, 3}},
        {ShapeKind::LC, {4, 0}},
        {ShapeKind::LC, {4, 4}},
        {ShapeKind::LD, {4, 6}},
        {ShapeKind::LD, {6, 4}},
    };
    return v;
}

// b -> b+3 band for a=2: 15 cells
const std::vector<Placement>& delta2() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {1, 3}},
        {ShapeKind::LA, {2, 2}},
        {ShapeKind::LA, {3, 1}},
        {ShapeKind::LC, {1, 0}},
        {ShapeKind::LD, {0, 2}},
    };
    return v;
}

// b -> b+3 band for a=3: 21 cells
const std::vector<Placement>& delta3() {
    static const std::vector<Placement> v = {
        {ShapeKind::LA, {2, 4}},
        {ShapeKind::LA, {3, 3}},
        {ShapeKind::LA, {4, 2}},
        {ShapeKind::LC, {1, 0}},
        {ShapeKind::LC, {2, 1}},
        {ShapeKind::LD, {0, 2}},
        {ShapeKind::LD, {1, 3}},
    };
    return v;
}

} // namespace trom::tables
