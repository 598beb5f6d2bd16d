#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "heffter/base_arrays.hpp"
#include "heffter/dispatch.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

TEST_SUITE("verify") {
    TEST_CASE("3x3 example is modular but not integer or shiftable") {
        const VerificationReport rep = verify(base::h3x3());
        CHECK(rep.is_modular_heffter);
        CHECK_FALSE(rep.is_integer_heffter);
        CHECK_FALSE(rep.is_shiftable);
        CHECK(rep.support_ok);
        // row 0 sums to -19, which is 0 mod 19: modular passes, integer fails
        CHECK(rep.modular_sums_ok);
        CHECK_FALSE(rep.integer_sums_ok);
    }

    TEST_CASE("4x6 seed is modular, integer and shiftable") {
        const VerificationReport rep = verify(base::h4x6());
        CHECK(rep.is_modular_heffter);
        CHECK(rep.is_integer_heffter);
        CHECK(rep.is_shiftable);
        CHECK(rep.failures.empty());
    }

    TEST_CASE("swapping the 1 and 2 in the 3x4 example keeps support, breaks columns") {
        Grid g = base::h3x4();
        REQUIRE(g.at(0, 0) == 1);
        REQUIRE(g.at(0, 1) == 2);
        g.at(0, 0) = 2;
        g.at(0, 1) = 1;
        const VerificationReport rep = verify(g);
        CHECK(rep.support_ok);
        CHECK_FALSE(rep.is_modular_heffter);
        const bool has_col_witness = std::ranges::any_of(
            rep.failures, [](const VerificationFailure& f) { return f.property == "col_sum"; });
        CHECK(has_col_witness);
    }

    TEST_CASE("zero entries and out-of-range values are support failures") {
        const VerificationReport rep = verify(Grid::from_rows({{0, 2, -3}, {4, 99, -6}, {7, 8, -9}}));
        CHECK_FALSE(rep.support_ok);
        int out_of_range = 0, missing = 0, duplicate = 0;
        for (const VerificationFailure& f : rep.failures) {
            if (f.property != "support") continue;
            if (f.detail.find("outside") != std::string::npos) ++out_of_range;
            if (f.detail.find("missing") != std::string::npos) ++missing;
            if (f.detail.find("more than once") != std::string::npos) ++duplicate;
        }
        CHECK(out_of_range == 2);
        CHECK(missing == 2);  // 1 and 5 are absent
        CHECK(duplicate == 0);
    }

    TEST_CASE("duplicate absolute values get their own failure kind") {
        const VerificationReport rep = verify(Grid::from_rows({{1, 2, -3}, {4, 5, -6}, {7, 8, -1}}));
        const bool dup = std::ranges::any_of(rep.failures, [](const VerificationFailure& f) {
            return f.property == "support" && f.detail.find("more than once") != std::string::npos;
        });
        CHECK(dup);
    }

    TEST_CASE("small dimensions are non-Heffter even with perfect sums") {
        // 2x2 with support {1..4} and both lines summing to 0 mod 9
        const VerificationReport rep = verify(Grid::from_rows({{1, -3}, {-4, 2}}));
        CHECK_FALSE(rep.dimension_ok);
        CHECK_FALSE(rep.is_modular_heffter);
    }

    TEST_CASE("transpose agrees on all class flags") {
        for (Entry m = 3; m <= 9; ++m)
            for (Entry n = 3; n <= 9; ++n) {
                const ConstructionResult r = construct(m, n);
                const VerificationReport a = verify(r.array);
                const VerificationReport b = verify(transpose(r.array));
                CHECK(a.is_modular_heffter == b.is_modular_heffter);
                CHECK(a.is_integer_heffter == b.is_integer_heffter);
                CHECK(a.is_shiftable == b.is_shiftable);
            }
    }

    TEST_CASE("negation and line permutations preserve the verdict") {
        std::mt19937 rng(3);
        for (Entry m = 3; m <= 8; ++m)
            for (Entry n = 3; n <= 8; ++n) {
                const ConstructionResult r = construct(m, n);
                const VerificationReport before = verify(r.array);

                const VerificationReport neg = verify(negate(r.array));
                CHECK(before.is_modular_heffter == neg.is_modular_heffter);
                CHECK(before.is_integer_heffter == neg.is_integer_heffter);
                CHECK(before.is_shiftable == neg.is_shiftable);

                const Grid& g = r.array.grid();
                std::vector<int> rows(static_cast<std::size_t>(g.rows())), cols(static_cast<std::size_t>(g.cols()));
                std::iota(rows.begin(), rows.end(), 0);
                std::iota(cols.begin(), cols.end(), 0);
                std::shuffle(rows.begin(), rows.end(), rng);
                std::shuffle(cols.begin(), cols.end(), rng);
                Grid perm(g.rows(), g.cols());
                for (int i = 0; i < g.rows(); ++i)
                    for (int j = 0; j < g.cols(); ++j)
                        perm.at(i, j) = g.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
                const VerificationReport after = verify(perm);
                CHECK(before.is_modular_heffter == after.is_modular_heffter);
                CHECK(before.is_integer_heffter == after.is_integer_heffter);
                CHECK(before.is_shiftable == after.is_shiftable);
            }
    }

    TEST_CASE("mutation fuzz: single sign flips and value collisions are always caught") {
        std::mt19937 rng(17);
        for (Entry m = 3; m <= 7; ++m)
            for (Entry n = 3; n <= 7; ++n) {
                const Grid good = construct(m, n).array.grid();
                REQUIRE(verify(good).is_modular_heffter);
                std::uniform_int_distribution<int> cell(0, static_cast<int>(m * n) - 1);
                for (int trial = 0; trial < 60; ++trial) {
                    Grid bad = good;
                    const int at = cell(rng);
                    if (trial % 2 == 0) {
                        bad.at(at / bad.cols(), at % bad.cols()) *= -1;
                    } else {
                        int other = cell(rng);
                        while (other == at) other = cell(rng);
                        const Entry stolen = bad.at(other / bad.cols(), other % bad.cols());
                        bad.at(at / bad.cols(), at % bad.cols()) = (trial % 4 == 1) ? stolen : -stolen;
                    }
                    CHECK_FALSE(verify(bad).is_modular_heffter);
                }
            }
    }

    TEST_CASE("integer verdicts only ever appear when mn = 0,3 mod 4") {
        for (Entry m = 3; m <= 12; ++m)
            for (Entry n = 3; n <= 12; ++n) {
                const VerificationReport rep = verify(construct(m, n).array);
                if (rep.is_integer_heffter) {
                    const Entry res = (m * n) % 4;
                    CHECK((res == 0 || res == 3));
                }
            }
    }
}

TEST_SUITE("necessity") {
    TEST_CASE("dimension floor applies to every class") {
        CHECK_FALSE(assert_necessity(2, 5, HeffterClass::modular).allowed);
        CHECK(assert_necessity(2, 5, HeffterClass::modular).reason == "m < 3");
        CHECK_FALSE(assert_necessity(5, 2, HeffterClass::shiftable).allowed);
    }

    TEST_CASE("integer congruence") {
        const Necessity nec = assert_necessity(3, 3, HeffterClass::integer);
        CHECK_FALSE(nec.allowed);
        CHECK(nec.reason.find("(mod 4)") != std::string::npos);
        CHECK(assert_necessity(3, 4, HeffterClass::integer).allowed);
        CHECK_FALSE(assert_necessity(3, 6, HeffterClass::integer).allowed);
    }

    TEST_CASE("shiftable needs both sides even") {
        CHECK(assert_necessity(4, 6, HeffterClass::shiftable).allowed);
        CHECK_FALSE(assert_necessity(5, 6, HeffterClass::shiftable).allowed);
        CHECK_FALSE(assert_necessity(4, 7, HeffterClass::shiftable).allowed);
    }
}
