#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "heffter/base_arrays.hpp"
#include "heffter/even_constructions.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

TEST_SUITE("even constructions") {
    TEST_CASE("seed tiles verify as shiftable integer arrays") {
        for (const Tile* t : {&base_4x4(), &base_4x6(), &base_6x6()}) {
            const VerificationReport rep = verify(t->grid);
            CHECK(rep.is_shiftable);
            CHECK(line_sums(t->grid).all_zero());
        }
    }

    TEST_CASE("4x6 and 6x6 are the single seed tiles") {
        CHECK(build_even(4, 6).array.grid() == base::h4x6());
        CHECK(build_even(6, 6).array.grid() == base::h6x6());
        CHECK(build_even(4, 4).array.grid() == base_4x4().grid);
    }

    TEST_CASE("8x4 stacks the 4x4 seed over its 16-shift") {
        const Grid g = build_even(8, 4).array.grid();
        REQUIRE(g.rows() == 8);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(g.at(r, c) == base_4x4().grid.at(r, c));
                CHECK(g.at(r + 4, c) == shift(base_4x4().grid, 16).at(r, c));
            }
        CHECK(verify(g).is_shiftable);
    }

    TEST_CASE("6x10 leads with the 6x6 seed then a transposed 4x6 shifted by 36") {
        const ConstructionResult r = build_even(6, 10);
        const Grid& g = r.array.grid();
        REQUIRE(g.rows() == 6);
        REQUIRE(g.cols() == 10);
        const Grid tail = shift(transpose(base::h4x6()), 36);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 4; ++j) CHECK(g.at(i, 6 + j) == tail.at(i, j));
        const std::vector<Entry> sup = support(g);
        CHECK(sup.front() == 1);
        CHECK(sup.back() == 60);
        CHECK(verify(g).is_shiftable);
    }

    TEST_CASE("2 mod 4 rows with 0 mod 4 columns comes out as the transpose") {
        const ConstructionResult r = build_even(10, 8);
        CHECK(r.array.rows() == 10);
        CHECK(r.array.cols() == 8);
        CHECK(verify(r.array).is_shiftable);
    }

    TEST_CASE("whole even range verifies shiftable with matching claim") {
        for (Entry m = 4; m <= 26; m += 2)
            for (Entry n = 4; n <= 26; n += 2) {
                const ConstructionResult r = build_even(m, n);
                const VerificationReport rep = verify(r.array);
                CHECK(rep.is_shiftable);
                CHECK(r.claimed.shiftable);
                CHECK(r.claimed.integer);
            }
    }

    TEST_CASE("placements partition 1..mn into consecutive support blocks") {
        for (auto [m, n] : {std::pair<Entry, Entry>{8, 4}, {12, 10}, {10, 10}, {16, 24}, {6, 14}}) {
            const ConstructionResult r = build_even(m, n);
            std::vector<TilePlacement> ps = r.provenance.placements;
            REQUIRE(!ps.empty());
            std::ranges::sort(ps, {}, &TilePlacement::support_lo);
            Entry expect = 1;
            for (const TilePlacement& p : ps) {
                CHECK(p.support_lo == expect);
                CHECK(p.support_hi == p.support_lo + static_cast<Entry>(p.rows) * p.cols - 1);
                expect = p.support_hi + 1;
            }
            CHECK(expect == m * n + 1);
        }
    }

    TEST_CASE("odd or undersized dimensions are rejected") {
        CHECK_THROWS_AS(build_even(3, 4), std::invalid_argument);
        CHECK_THROWS_AS(build_even(4, 7), std::invalid_argument);
        CHECK_THROWS_AS(build_even(2, 4), std::invalid_argument);
    }
}
