#include <doctest.h>

#include <stdexcept>

#include "heffter/base_arrays.hpp"
#include "heffter/low_rows.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

TEST_SUITE("low rows") {
    TEST_CASE("3x3 and 3x4 are the fixed examples") {
        CHECK(build_3xn(3).array.grid() == base::h3x3());
        CHECK(build_3xn(4).array.grid() == base::h3x4());
        CHECK_FALSE(build_3xn(3).claimed.integer);
        CHECK(build_3xn(4).claimed.integer);
    }

    TEST_CASE("3x8 is the k=0 sporadic tile with the quoted first column") {
        const ConstructionResult r = build_3xn(8);
        const Grid& g = r.array.grid();
        REQUIRE(g.cols() == 8);
        CHECK(g.at(0, 0) == -13);
        CHECK(g.at(1, 0) == 4);
        CHECK(g.at(2, 0) == 9);
        CHECK(g.at(0, 0) + g.at(1, 0) + g.at(2, 0) == 0);
        const VerificationReport rep = verify(g);
        CHECK(rep.is_integer_heffter);
        const std::vector<Entry> sup = support(g);
        CHECK(sup.front() == 1);
        CHECK(sup.back() == 24);
    }

    TEST_CASE("3x5 is integer with support 1..15") {
        const ConstructionResult r = build_3xn(5);
        CHECK(verify(r.array).is_integer_heffter);
        const std::vector<Entry> sup = support(r.array.grid());
        for (Entry v = 1; v <= 15; ++v) CHECK(sup[static_cast<std::size_t>(v) - 1] == v);
    }

    TEST_CASE("3xn verifies for n up to 64; integer exactly when n = 0,1 mod 4") {
        for (Entry n = 3; n <= 64; ++n) {
            const ConstructionResult r = build_3xn(n);
            const VerificationReport rep = verify(r.array);
            CHECK(rep.is_modular_heffter);
            const bool integer_expected = (n % 4 == 0 || n % 4 == 1);
            CHECK(rep.is_integer_heffter == integer_expected);
            CHECK(r.claimed.integer == integer_expected);
        }
    }

    TEST_CASE("5x4, 5x5, 5x6 are the printed sporadic arrays") {
        CHECK(build_5xn(4).array.grid() == base::h5x4());
        CHECK(build_5xn(5).array.grid() == base::h5x5());
        CHECK(build_5xn(6).array.grid() == base::h5x6());

        // 5x4: first row sums to zero over the integers
        CHECK(base::h5x4().at(0, 0) == 7);
        CHECK(verify(base::h5x4()).is_integer_heffter);
        // 5x5: modular over Z_51 only
        const VerificationReport rep55 = verify(base::h5x5());
        CHECK(rep55.is_modular_heffter);
        CHECK_FALSE(rep55.is_integer_heffter);
    }

    TEST_CASE("5x3 is the transposed 3x5") {
        const ConstructionResult r = build_5xn(3);
        CHECK(r.array.rows() == 5);
        CHECK(r.array.cols() == 3);
        CHECK(r.array.grid() == transpose(build_3xn(5).array.grid()));
        CHECK(verify(r.array).is_integer_heffter);
    }

    TEST_CASE("5x15 uses one family tile and is integer with support 1..75") {
        const ConstructionResult r = build_5xn(15);
        CHECK(r.provenance.params.at("k") == 1);
        const VerificationReport rep = verify(r.array);
        CHECK(rep.is_integer_heffter);
        const std::vector<Entry> sup = support(r.array.grid());
        CHECK(sup.back() == 75);
    }

    TEST_CASE("5xn verifies for n up to 64; integer exactly when n = 0,3 mod 4") {
        for (Entry n = 3; n <= 64; ++n) {
            const ConstructionResult r = build_5xn(n);
            const VerificationReport rep = verify(r.array);
            CHECK(rep.is_modular_heffter);
            const bool integer_expected = (n % 4 == 0 || n % 4 == 3);
            CHECK(rep.is_integer_heffter == integer_expected);
            CHECK(r.claimed.integer == integer_expected);
        }
    }

    TEST_CASE("n below 3 is rejected") {
        CHECK_THROWS_AS(build_3xn(2), std::invalid_argument);
        CHECK_THROWS_AS(build_5xn(1), std::invalid_argument);
    }
}
