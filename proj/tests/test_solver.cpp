#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "trom/errors.hpp"
#include "trom/sampler.hpp"
#include "trom/solver.hpp"

using namespace trom;

TEST_CASE("solve: 2x3 is covered and the witness validates") {
    Region r = parse_region("###\n###");
    auto res = solve(r, PieceSet::ALL_L);
    REQUIRE(res.covered());
    CHECK(validate_tiling(r, *res.tiling).ok);
    CHECK(res.tiling->size() == 2);
}

TEST_CASE("solve: 2x2 is uncoverable without search") {
    Region r = parse_region("##\n##");
    auto res = solve(r, PieceSet::ALL_L);
    CHECK(!res.covered());
    CHECK(res.nodes_expanded == 0);  // 3 does not divide 4
}

TEST_CASE("count: frozen small values against the enumeration oracle") {
    Region r = parse_region("###\n###");
    auto oracle = testsupport::all_tilings_oracle(r, PieceSet::ALL_L);
    CHECK(oracle.size() == 2);
    CHECK(count(r, PieceSet::ALL_L).count == oracle.size());

    Region ell = Region({{0, 0}, {0, 1}, {1, 1}});
    CHECK(count(ell, PieceSet::ALL_L).count == 1);

    Region ad1 = parse_region("##\n##");
    CHECK(count(ad1, PieceSet::ALL_L).count == 0);
}

TEST_CASE("count matches full enumeration on random regions") {
    std::mt19937_64 rng(42);
    const PieceSet presets[] = {PieceSet::ALL_L, PieceSet::RIGHT_180, PieceSet::I_ONLY,
                                PieceSet::EVERYTHING};
    for (int iter = 0; iter < 150; ++iter) {
        int n = 3 * (1 + static_cast<int>(rng() % 5));
        Region r = random_region(rng, n, iter % 4 == 0 ? 3 : 0);
        for (PieceSet ps : presets) {
            auto oracle = testsupport::all_tilings_oracle(r, ps);
            auto got = count(r, ps);
            REQUIRE(got.count == oracle.size());
        }
    }
}

TEST_CASE("covered iff count is positive") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng() % 18);
        Region r = random_region(rng, n, static_cast<int>(rng() % 4) == 0 ? 1 : 0);
        for (PieceSet ps : {PieceSet::ALL_L, PieceSet::RIGHT_180, PieceSet::EVERYTHING}) {
            auto s = solve(r, ps);
            auto c = count(r, ps);
            CHECK(s.covered() == (c.count > 0));
            if (s.covered()) CHECK(validate_tiling(r, *s.tiling).ok);
        }
    }
}

TEST_CASE("max_packing: fixed examples") {
    CHECK(max_packing(parse_region("##\n##"), PieceSet::RIGHT_180).max_tiles == 1);
    CHECK(max_packing(parse_region("###\n###"), PieceSet::ALL_L).max_tiles == 2);
    CHECK(max_packing(Region{}, PieceSet::ALL_L).max_tiles == 0);

    Region def = parse_region("#X\n##");
    CHECK(max_packing(def, PieceSet::EVERYTHING).max_tiles == 1);
}

TEST_CASE("max_packing witness is disjoint, inside, and the right size") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Region r = random_region(rng, n, static_cast<int>(rng() % 2));
        for (PieceSet ps : {PieceSet::ALL_L, PieceSet::RIGHT_180, PieceSet::I_ONLY}) {
            auto res = max_packing(r, ps);
            CHECK(res.max_tiles == testsupport::max_packing_oracle(r, ps));
            CHECK(res.witness.size() == res.max_tiles);
            auto cov = res.witness.covered_cells();
            for (std::size_t i = 1; i < cov.size(); ++i) CHECK(cov[i - 1] != cov[i]);
            for (Cell c : cov) {
                CHECK(r.contains(c));
                CHECK(!r.is_defect(c));
            }
        }
    }
}

TEST_CASE("node budget raises ResourceLimit, distinct from uncoverable") {
    Region r = parse_region("###\n###");
    SolverOptions tiny{1};
    CHECK_THROWS_AS(solve(r, PieceSet::ALL_L, tiny), ResourceLimit);
    CHECK_THROWS_AS(count(r, PieceSet::ALL_L, tiny), ResourceLimit);
    CHECK_THROWS_AS(max_packing(r, PieceSet::ALL_L, tiny), ResourceLimit);

    // divisibility fast path answers without spending nodes even at budget 0
    Region odd = parse_region("##\n##");
    SolverOptions zero{0};
    CHECK(!solve(odd, PieceSet::ALL_L, zero).covered());
    CHECK(count(odd, PieceSet::ALL_L, zero).count == 0);
}

TEST_CASE("determinism: same input, same witness, same node count") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        Region r = random_region(rng, 12);
        auto a = solve(r, PieceSet::EVERYTHING);
        auto b = solve(r, PieceSet::EVERYTHING);
        CHECK(a.nodes_expanded == b.nodes_expanded);
        CHECK(a.covered() == b.covered());
        if (a.covered()) CHECK(a.tiling->placements == b.tiling->placements);
        auto pa = max_packing(r, PieceSet::ALL_L);
        auto pb = max_packing(r, PieceSet::ALL_L);
        CHECK(pa.witness.placements == pb.witness.placements);
        CHECK(pa.nodes_expanded == pb.nodes_expanded);
    }
}
