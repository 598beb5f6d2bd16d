#include <doctest.h>

#include <stdexcept>

#include "heffter/even_constructions.hpp"
#include "heffter/l_construction.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

TEST_SUITE("l construction") {
    TEST_CASE("9x9 is the corner alone at x = 81, y = 4") {
        const ConstructionResult r = build_1mod4_1mod4(9, 9);
        CHECK(r.provenance.params.at("x") == 81);
        CHECK(r.provenance.params.at("y") == 4);
        CHECK(r.provenance.placements.size() == 1);
        CHECK(r.array.modulus() == 163);
        const VerificationReport rep = verify(r.array);
        CHECK(rep.is_modular_heffter);
        CHECK_FALSE(rep.is_integer_heffter);
    }

    TEST_CASE("13x9 adds one transposed border tile on the left, no interior") {
        const ConstructionResult r = build_1mod4_1mod4(13, 9);
        REQUIRE(r.provenance.placements.size() == 2);
        const TilePlacement& side = r.provenance.placements[1];
        CHECK(side.row == 9);
        CHECK(side.col == 0);
        CHECK(side.rows == 4);
        CHECK(side.cols == 9);
        CHECK(verify(r.array).is_modular_heffter);
    }

    TEST_CASE("13x13 has one top tile, one side tile, and a 4x4 interior shifted by 135") {
        const ConstructionResult r = build_1mod4_1mod4(13, 13);
        const Grid& g = r.array.grid();
        const Grid interior = shift(build_even(4, 4).array.grid(), 36 * 6 - 81);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(g.at(9 + i, 9 + j) == interior.at(i, j));
        CHECK(verify(r.array).is_modular_heffter);
    }

    TEST_CASE("7x7 is the corner alone at x = 49, y = 2") {
        const ConstructionResult r = build_3mod4_3mod4(7, 7);
        CHECK(r.provenance.params.at("x") == 49);
        CHECK(r.provenance.params.at("y") == 2);
        CHECK(r.array.modulus() == 99);
        CHECK(verify(r.array).is_modular_heffter);
    }

    TEST_CASE("7x11 is the corner plus one top border tile") {
        const ConstructionResult r = build_3mod4_3mod4(7, 11);
        CHECK(r.provenance.placements.size() == 2);
        CHECK(r.array.modulus() == 155);
        CHECK(verify(r.array).is_modular_heffter);
    }

    TEST_CASE("11x11 wraps a 4x4 interior") {
        const ConstructionResult r = build_3mod4_3mod4(11, 11);
        const VerificationReport rep = verify(r.array);
        CHECK(rep.is_modular_heffter);
        CHECK_FALSE(rep.is_integer_heffter);
        CHECK(support(r.array.grid()).back() == 121);
    }

    TEST_CASE("9x7 integer corner alone with support 1..63") {
        const ConstructionResult r = build_1mod4_3mod4(9, 7);
        CHECK(r.provenance.placements.size() == 1);
        const VerificationReport rep = verify(r.array);
        CHECK(rep.is_integer_heffter);
        const std::vector<Entry> sup = support(r.array.grid());
        CHECK(sup.front() == 1);
        CHECK(sup.back() == 63);
    }

    TEST_CASE("9x11 and 13x7 stay integer with one border tile each") {
        const ConstructionResult a = build_1mod4_3mod4(9, 11);
        CHECK(a.provenance.placements.size() == 2);
        CHECK(verify(a.array).is_integer_heffter);

        const ConstructionResult b = build_1mod4_3mod4(13, 7);
        CHECK(b.provenance.placements.size() == 2);
        CHECK(b.provenance.placements[1].rows == 4);
        CHECK(b.provenance.placements[1].cols == 7);
        CHECK(verify(b.array).is_integer_heffter);
    }

    TEST_CASE("sweeps: class flags match the congruence") {
        for (Entry m = 9; m <= 29; m += 4)
            for (Entry n = 9; n <= 29; n += 4) {
                const VerificationReport rep = verify(build_1mod4_1mod4(m, n).array);
                CHECK(rep.is_modular_heffter);
                CHECK_FALSE(rep.is_integer_heffter);
            }
        for (Entry m = 7; m <= 27; m += 4)
            for (Entry n = 7; n <= 27; n += 4) {
                const VerificationReport rep = verify(build_3mod4_3mod4(m, n).array);
                CHECK(rep.is_modular_heffter);
                CHECK_FALSE(rep.is_integer_heffter);
            }
        for (Entry m = 9; m <= 29; m += 4)
            for (Entry n = 7; n <= 27; n += 4) {
                const VerificationReport rep = verify(build_1mod4_3mod4(m, n).array);
                CHECK(rep.is_integer_heffter);
            }
    }

    TEST_CASE("preconditions") {
        CHECK_THROWS_AS(build_1mod4_1mod4(5, 9), std::invalid_argument);
        CHECK_THROWS_AS(build_1mod4_1mod4(9, 11), std::invalid_argument);
        CHECK_THROWS_AS(build_3mod4_3mod4(3, 7), std::invalid_argument);
        CHECK_THROWS_AS(build_1mod4_3mod4(9, 9), std::invalid_argument);
    }
}
