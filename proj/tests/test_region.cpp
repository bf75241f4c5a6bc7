#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "support/polyiter.hpp"
#include "trom/errors.hpp"
#include "trom/region.hpp"
#include "trom/sampler.hpp"

using namespace trom;
using testsupport::all_tilings_oracle;
using testsupport::subsets_oracle;

TEST_CASE("parse: plain square") {
    Region r = parse_region("##\n##");
    CHECK(r.size() == 4);
    CHECK(r.defects().empty());
    CHECK(r.contains({0, 0}));
    CHECK(r.contains({1, 1}));
}

TEST_CASE("parse: first text line is the top row") {
    Region r = parse_region("#.\n##");
    CHECK(r.size() == 3);
    CHECK(r.contains({0, 1}));
    CHECK(!r.contains({1, 1}));
    CHECK(r.contains({0, 0}));
    CHECK(r.contains({1, 0}));
}

TEST_CASE("parse: defect marker") {
    Region r = parse_region("#X\n##");
    CHECK(r.size() == 4);
    REQUIRE(r.defects().size() == 1);
    CHECK(r.defects()[0] == Cell{1, 1});  // upper-right
    CHECK(r.is_defect({1, 1}));
    CHECK(r.free_size() == 3);
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_region("#.#"), DisconnectedRegion);
    CHECK_THROWS_AS(parse_region("#\n.\n#"), DisconnectedRegion);
    CHECK_THROWS_AS(parse_region("#?#"), SyntaxError);
    CHECK_THROWS_AS(parse_region(""), SyntaxError);
    CHECK_THROWS_AS(parse_region("..."), SyntaxError);
    CHECK_NOTHROW(parse_region("##  \n##\t\n"));   // trailing blanks ignored
    CHECK_NOTHROW(parse_region("##\r\n##\r\n"));   // CRLF tolerated
}

TEST_CASE("diagonal contact is not adjacency") {
    CHECK_THROWS_AS(parse_region("#.\n.#"), DisconnectedRegion);
    CHECK_THROWS_AS(parse_region(".#\n#."), DisconnectedRegion);
}

TEST_CASE("defects must sit inside the footprint") {
    CHECK_THROWS_AS(Region({{0, 0}, {1, 0}}, {{5, 5}}), DefectOutside);
}

TEST_CASE("serialize normalizes and round-trips") {
    Region r = parse_region("#X\n##");
    CHECK(serialize_region(r) == "#X\n##\n");
    Region moved = r.translated(10, -3);
    CHECK(serialize_region(moved) == "#X\n##\n");
    CHECK(moved.congruent(r));
    CHECK(parse_region(serialize_region(moved)) == r.normalized());
}

TEST_CASE("round-trip holds on random regions") {
    std::mt19937_64 rng(20260816);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 40);
        int d = static_cast<int>(rng() % (static_cast<unsigned>(n) / 2 + 1));
        Region r = random_region(rng, n, d);
        Region back = parse_region(serialize_region(r));
        REQUIRE(back == r.normalized());
    }
}

TEST_CASE("subdivision quadruples cells and keeps connectivity") {
    Region one = parse_region("#");
    Region four = subdivide_boxplus(one);
    CHECK(four.size() == 4);
    CHECK(four == parse_region("##\n##"));

    Region row3 = parse_region("###");
    Region twoBySix = subdivide_boxplus(row3);
    CHECK(twoBySix.size() == 12);
    CHECK(twoBySix == parse_region("######\n######"));

    Region ell = Region({{0, 0}, {0, 1}, {1, 1}});
    CHECK(subdivide_boxplus(ell).size() == 12);

    Region with_defect = parse_region("#X\n##");
    Region sub = subdivide_boxplus(with_defect);
    CHECK(sub.size() == 16);
    CHECK(sub.defects().size() == 4);
    CHECK(sub.is_defect({2, 2}));
    CHECK(sub.is_defect({3, 3}));
    CHECK(!sub.is_defect({1, 1}));

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        Region r = random_region(rng, 1 + static_cast<int>(rng() % 20));
        Region s = subdivide_boxplus(r);
        CHECK(s.size() == 4 * r.size());  // ctor would throw if disconnected
    }
}

TEST_CASE("enumerate_placements: tiny fixed cases") {
    Region sq = parse_region("##\n##");
    auto right = enumerate_placements(sq, PieceSet::RIGHT_180);
    REQUIRE(right.size() == 2);
    CHECK(right[0] == Placement{ShapeKind::LA, {0, 0}});
    CHECK(right[1] == Placement{ShapeKind::LB, {0, 0}});

    CHECK(enumerate_placements(parse_region("#"), PieceSet::ALL_L).empty());
}

TEST_CASE("enumerate_placements: 2x3 count frozen against the subset oracle") {
    Region r = parse_region("###\n###");
    auto oracle = subsets_oracle(r, PieceSet::ALL_L);
    CHECK(oracle.size() == 8);
    auto got = enumerate_placements(r, PieceSet::ALL_L);
    REQUIRE(got.size() == oracle.size());
    CHECK(got == oracle);
}

TEST_CASE("enumerate_placements agrees with the subset oracle everywhere") {
    const PieceSet presets[] = {PieceSet::ALL_L, PieceSet::RIGHT_180, PieceSet::LEFT_180,
                                PieceSet::I_ONLY, PieceSet::EVERYTHING};
    for (int n = 1; n <= 6; ++n) {
        for (const auto& cells : testsupport::fixed_polyominoes(n)) {
            Region r(cells);
            for (PieceSet ps : presets) CHECK(enumerate_placements(r, ps) == subsets_oracle(r, ps));
        }
    }
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 7 + static_cast<int>(rng() % 6);
        Region r = random_region(rng, n, static_cast<int>(rng() % 3));
        for (PieceSet ps : presets) CHECK(enumerate_placements(r, ps) == subsets_oracle(r, ps));
    }
}

TEST_CASE("validate_tiling: hand cases") {
    Region r = parse_region("###\n###");
    Tiling good{{{ShapeKind::LA, {0, 0}}, {ShapeKind::LB, {1, 0}}}};
    CHECK(validate_tiling(r, good).ok);

    auto empty = validate_tiling(r, Tiling{});
    CHECK(!empty.ok);
    CHECK(empty.violation.find("uncovered") != std::string::npos);

    Tiling overlap{{{ShapeKind::LA, {0, 0}}, {ShapeKind::LA, {0, 0}}}};
    auto rep = validate_tiling(r, overlap);
    CHECK(!rep.ok);
    CHECK(rep.violation.find("overlap") != std::string::npos);

    Tiling outside{{{ShapeKind::LA, {5, 5}}}};
    auto rep2 = validate_tiling(r, outside);
    CHECK(!rep2.ok);
    CHECK(rep2.violation.find("outside") != std::string::npos);

    Region def = parse_region("X##\n###");
    Tiling on_defect{{{ShapeKind::LA, {0, 0}}}};
    auto rep3 = validate_tiling(def, on_defect);
    CHECK(!rep3.ok);
    CHECK(rep3.violation.find("defect") != std::string::npos);
}

TEST_CASE("validate_tiling accepts exactly the set partitions") {
    std::mt19937_64 rng(99);
    int accepted = 0;
    for (int iter = 0; iter < 120; ++iter) {
        int n = 3 * (1 + static_cast<int>(rng() % 4));
        Region r = random_region(rng, n);
        auto tilings = all_tilings_oracle(r, PieceSet::EVERYTHING);
        for (const Tiling& t : tilings) {
            REQUIRE(validate_tiling(r, t).ok);
            ++accepted;
            Tiling broken = t;
            broken.placements.pop_back();
            CHECK(!validate_tiling(r, broken).ok);
        }
    }
    CHECK(accepted > 50);  // the sample actually exercised the oracle
}
